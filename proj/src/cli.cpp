#include "alab/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "alab/aid.h"
#include "alab/bench.h"
#include "alab/bits.h"
#include "alab/complexity.h"
#include "alab/eca.h"
#include "alab/error.h"
#include "alab/io.h"
#include "alab/turing.h"

namespace alab::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string output;
  std::string format;  // empty = command default
};

unsigned default_threads() {
  if (const char* env = std::getenv("ALGORAND_LAB_THREADS")) {
    try {
      const unsigned long n = std::stoul(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

// Emits the primary result and its resolved-config record. With --output the
// result is written atomically and the record goes to "<output>.meta.json".
class Sink {
 public:
  Sink(const Globals& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {}

  void emit(const std::string& content, json meta) {
    meta["seed"] = g_.seed;
    meta["threads"] = g_.threads;
    if (!g_.format.empty()) meta["format"] = g_.format;
    if (g_.output.empty()) {
      out_ << content;
      err_ << "# meta " << meta.dump() << '\n';
    } else {
      meta["output"] = g_.output;
      io::write_file_atomic(g_.output, content);
      io::write_file_atomic(g_.output + ".meta.json", meta.dump(2) + "\n");
    }
  }

 private:
  const Globals& g_;
  std::ostream& out_;
  std::ostream& err_;
};

io::Format result_format(const Globals& g) {
  if (g.format.empty() || g.format == "csv") return io::Format::kCsv;
  if (g.format == "json") return io::Format::kJson;
  throw CLI::ValidationError("--format", "expected csv or json for this command");
}

turing::IndexRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--range", "expected lo..hi");
  try {
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--range", "expected lo..hi with unsigned integers");
  }
}

complexity::FallbackPolicy parse_policy(const std::string& s) {
  return s == "error" ? complexity::FallbackPolicy::kError : complexity::FallbackPolicy::kMaxPlusOne;
}

complexity::GridMode parse_grid_mode(const std::string& s) {
  return s == "row-flatten" ? complexity::GridMode::kRowFlatten : complexity::GridMode::kDirect;
}

std::shared_ptr<const turing::CtmTable> load_table(const std::string& path) {
  return std::make_shared<const turing::CtmTable>(io::load_ctm_table(std::filesystem::path(path)));
}

complexity::CtmEstimator make_estimator(const std::string& path, const std::string& policy,
                                        const std::string& mode) {
  return complexity::CtmEstimator(load_table(path), parse_policy(policy), parse_grid_mode(mode));
}

// Grids are scored directly only with 2D tables; a 1D table requires the
// degraded row-flatten mode to be named explicitly.
void check_grid_estimator(const complexity::CtmEstimator& est) {
  if (est.grid_mode() == complexity::GridMode::kDirect &&
      est.table().dimensionality != turing::Dimensionality::k2D) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid BDM needs a 2D table; pass --mode row-flatten to use a 1D table");
  }
}

BitString make_initial(const std::string& init, int width, std::uint64_t seed) {
  bench::BenchConfig cfg;
  cfg.width = width;
  cfg.seed = seed;
  cfg.initial = init == "single" ? bench::InitialCondition::kSingleOne
                                 : bench::InitialCondition::kSeededRandom;
  return bench::initial_row(cfg);
}

std::string grid_csv(const BitGrid& g) {
  std::string out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (c) out.push_back(',');
      out.push_back(static_cast<char>('0' + g.at(r, c)));
    }
    out.push_back('\n');
  }
  return out;
}

std::string render_grid(const BitGrid& g, const Globals& globals) {
  if (globals.format.empty() || globals.format == "pbm") return render_pbm(g);
  if (globals.format == "csv") return grid_csv(g);
  throw CLI::ValidationError("--format", "grids render as pbm or csv");
}

std::vector<bench::BenchmarkRow> read_benchmark_csv(const std::string& path) {
  std::istringstream in(io::read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kEmptyInput, "empty results file");
  std::map<std::string, std::size_t> col;
  {
    std::stringstream ss(line);
    std::string name;
    std::size_t i = 0;
    while (std::getline(ss, name, ',')) col[name] = i++;
  }
  for (const char* need : {"rule", "class", "lambda", "simplified_icons", "simplified_bits",
                           "lzw_bits", "entropy", "bdm"}) {
    if (!col.count(need)) throw Error(ErrorCode::kSchemaMismatch, std::string("results missing column ") + need);
  }
  std::vector<bench::BenchmarkRow> rows;
  long long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() < col.size()) throw Error(ErrorCode::kBadRecord, "short results row", line_no);
    try {
      bench::BenchmarkRow r;
      r.rule = std::stoi(f[col["rule"]]);
      r.wolfram_class = std::stoi(f[col["class"]]);
      r.lambda = std::stod(f[col["lambda"]]);
      r.simplified_icons = std::stoi(f[col["simplified_icons"]]);
      r.simplified_bits = std::stod(f[col["simplified_bits"]]);
      r.lzw_bits = std::stoull(f[col["lzw_bits"]]);
      r.entropy = std::stod(f[col["entropy"]]);
      r.bdm = std::stod(f[col["bdm"]]);
      rows.push_back(r);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kBadRecord, "bad results row", line_no);
    }
  }
  if (rows.empty()) throw Error(ErrorCode::kEmptyInput, "results file has no rows");
  return rows;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_cells(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--flip", "expected r,c[;r,c...]");
    try {
      cells.emplace_back(std::stoul(item.substr(0, comma)), std::stoul(item.substr(comma + 1)));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--flip", "expected r,c[;r,c...]");
    }
  }
  return cells;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algorithmic complexity estimation: CTM, BDM, ECA simplification, AID", "alab"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  g.threads = default_threads();
  app.add_option("--seed", g.seed, "Seed for every random draw")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (default $ALGORAND_LAB_THREADS or 1)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--output", g.output, "Write result to this path (atomically)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "pbm"}));

  std::function<void()> action;
  Sink sink(g, out, err);

  // ---- eca ----
  auto* eca_cmd = app.add_subcommand("eca", "Elementary cellular automata");
  eca_cmd->require_subcommand(1);

  int rule = 0, width = 64, steps = 64;
  std::string init = "single";
  auto* evolve = eca_cmd->add_subcommand("evolve", "Space-time evolution");
  evolve->add_option("--rule", rule)->required()->check(CLI::Range(0, 255));
  evolve->add_option("--width", width)->check(CLI::PositiveNumber);
  evolve->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
  evolve->add_option("--init", init)->check(CLI::IsMember({"single", "random"}));
  evolve->callback([&] {
    action = [&] {
      const BitGrid grid = eca::evolve(eca::rule_from_number(rule), make_initial(init, width, g.seed), steps);
      sink.emit(render_grid(grid, g), json{{"command", "eca evolve"}, {"rule", rule}, {"width", width},
                                          {"steps", steps}, {"init", init}, {"boundary", "cyclic"}});
    };
  });

  bool all_rules = false;
  auto* simplify = eca_cmd->add_subcommand("simplify", "Minimal wildcard icon cover");
  auto* simplify_rule = simplify->add_option("--rule", rule)->check(CLI::Range(0, 255));
  auto* simplify_all = simplify->add_flag("--all", all_rules);
  simplify_rule->excludes(simplify_all);
  simplify->callback([&] {
    if (!all_rules && simplify_rule->count() == 0) throw CLI::RequiredError("--rule or --all");
    action = [&] {
      io::ResultTable t;
      t.columns = {"rule", "icon_count", "ones_icons", "zeros_icons", "specified_cells", "bits", "icons"};
      const int lo = all_rules ? 0 : rule, hi = all_rules ? 255 : rule;
      for (int r = lo; r <= hi; ++r) {
        const auto s = eca::simplify(eca::rule_from_number(r));
        std::string icons;
        for (const auto& icon : s.icons) icons += (icons.empty() ? "" : " ") + icon.to_string();
        t.rows.push_back({static_cast<long long>(r), static_cast<long long>(s.icon_count),
                          static_cast<long long>(s.ones_icons), static_cast<long long>(s.zeros_icons),
                          static_cast<long long>(s.specified_cells), s.bits_upper_bound, icons});
      }
      sink.emit(io::export_results(t, result_format(g)),
                json{{"command", "eca simplify"}, {"all", all_rules}, {"rule", rule},
                     {"cost_order", "icon_count, specified_cells, lexicographic"},
                     {"bits_per_icon", eca::icon_bits()}});
    };
  });

  auto* lambda_cmd = eca_cmd->add_subcommand("lambda", "Langton's lambda");
  auto* lambda_rule = lambda_cmd->add_option("--rule", rule)->check(CLI::Range(0, 255));
  auto* lambda_all = lambda_cmd->add_flag("--all", all_rules);
  lambda_rule->excludes(lambda_all);
  lambda_cmd->callback([&] {
    if (!all_rules && lambda_rule->count() == 0) throw CLI::RequiredError("--rule or --all");
    action = [&] {
      io::ResultTable t;
      t.columns = {"rule", "lambda"};
      const int lo = all_rules ? 0 : rule, hi = all_rules ? 255 : rule;
      for (int r = lo; r <= hi; ++r) {
        t.rows.push_back({static_cast<long long>(r), eca::lambda(eca::rule_from_number(r))});
      }
      sink.emit(io::export_results(t, result_format(g)), json{{"command", "eca lambda"}, {"all", all_rules}});
    };
  });

  int rule_a = 0, rule_b = 0, split = 0;
  auto* interact = eca_cmd->add_subcommand("interact", "Two rules on split regions");
  interact->add_option("--rule-a", rule_a)->required()->check(CLI::Range(0, 255));
  interact->add_option("--rule-b", rule_b)->required()->check(CLI::Range(0, 255));
  interact->add_option("--split", split)->required();
  interact->add_option("--width", width)->check(CLI::PositiveNumber);
  interact->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
  interact->add_option("--init", init)->check(CLI::IsMember({"single", "random"}));
  interact->callback([&] {
    action = [&] {
      const BitGrid grid = eca::interact(eca::rule_from_number(rule_a), eca::rule_from_number(rule_b),
                                         make_initial(init, width, g.seed), steps, split);
      sink.emit(render_grid(grid, g),
                json{{"command", "eca interact"}, {"rule_a", rule_a}, {"rule_b", rule_b}, {"split", split},
                     {"width", width}, {"steps", steps}, {"init", init},
                     {"interaction", "region-split: cells < split use rule_a, others rule_b; "
                                     "chosen convention, not taken from a published construction"}});
    };
  });

  // ---- ctm ----
  auto* ctm_cmd = app.add_subcommand("ctm", "Coding-theorem tables");
  ctm_cmd->require_subcommand(1);

  int states = 2;
  std::uint64_t cutoff = 0, samples = 0;
  std::string range_text;
  auto* build = ctm_cmd->add_subcommand("build", "Enumerate an (n,2) machine space");
  build->add_option("--states", states)->required()->check(CLI::Range(1, 16));
  auto* cutoff_opt = build->add_option("--cutoff", cutoff)->check(CLI::PositiveNumber);
  build->add_option("--range", range_text, "Machine index interval lo..hi (half-open)");
  build->add_option("--samples", samples, "Sample this many machines instead of enumerating");
  bool complete = false;
  build->add_flag("--complement-completion", complete, "Also count blank-1 tape runs (exact, via symmetry)");
  build->callback([&] {
    action = [&] {
      turing::TmSpace space{states, 0};
      if (cutoff_opt->count()) {
        space.cutoff = cutoff;
      } else if (auto c = turing::default_cutoff(states)) {
        space.cutoff = *c;
      } else {
        throw CLI::RequiredError("--cutoff (no certified default for " + std::to_string(states) + " states)");
      }
      turing::CtmTable t;
      if (samples > 0) {
        t = turing::build_ctm_sampled(space, samples, g.seed);
      } else {
        std::optional<turing::IndexRange> range;
        if (!range_text.empty()) range = parse_range(range_text);
        t = turing::build_ctm_table(space, range, g.threads);
      }
      if (complete) t = turing::complement_complete(t);
      sink.emit(io::save_ctm_table(t), json{{"command", "ctm build"}, {"states", states},
                                            {"cutoff", space.cutoff}, {"range", range_text},
                                            {"samples", samples}, {"complement_completion", complete}});
    };
  });

  std::vector<std::string> merge_files;
  auto* merge = ctm_cmd->add_subcommand("merge", "Merge disjoint shards");
  merge->add_option("files", merge_files)->required()->check(CLI::ExistingFile);
  merge->callback([&] {
    action = [&] {
      turing::CtmTable t = io::load_ctm_table(std::filesystem::path(merge_files.front()));
      for (std::size_t i = 1; i < merge_files.size(); ++i) {
        t = turing::merge_ctm_tables(t, io::load_ctm_table(std::filesystem::path(merge_files[i])));
      }
      sink.emit(io::save_ctm_table(t), json{{"command", "ctm merge"}, {"files", merge_files}});
    };
  });

  std::string table_path, query_string, policy = "max_plus_one";
  auto* query = ctm_cmd->add_subcommand("query", "CTM value of a string in bits");
  query->add_option("--table", table_path)->required()->check(CLI::ExistingFile);
  query->add_option("--string", query_string)->required();
  query->add_option("--fallback", policy)->check(CLI::IsMember({"error", "max_plus_one"}));
  query->callback([&] {
    action = [&] {
      const auto est = make_estimator(table_path, policy, "direct");
      const auto k = est.lookup(parse_bits(query_string));
      std::ostringstream s;
      s << "string,bits,fallback\n" << query_string << ',' << io::format_number(k.bits) << ','
        << (k.fallback ? "true" : "false") << '\n';
      sink.emit(s.str(), json{{"command", "ctm query"}, {"table", table_path}, {"fallback_policy", policy}});
    };
  });

  // ---- bdm ----
  std::string input, grid_mode = "direct";
  int d = 4;
  auto* bdm_cmd = app.add_subcommand("bdm", "Block decomposition estimate");
  bdm_cmd->add_option("--table", table_path)->required()->check(CLI::ExistingFile);
  bdm_cmd->add_option("--input", input, "Bit string, or a grid file (PBM or bit rows)")->required();
  bdm_cmd->add_option("--d", d)->check(CLI::PositiveNumber);
  bdm_cmd->add_option("--fallback", policy)->check(CLI::IsMember({"error", "max_plus_one"}));
  bdm_cmd->add_option("--mode", grid_mode)->check(CLI::IsMember({"direct", "row-flatten"}));
  bdm_cmd->callback([&] {
    action = [&] {
      const auto est = make_estimator(table_path, policy, grid_mode);
      complexity::BdmReport report;
      std::string kind;
      if (!input.empty() && input.find_first_not_of("01") == std::string::npos) {
        report = complexity::bdm_string(est, parse_bits(input), d);
        kind = "string";
      } else {
        check_grid_estimator(est);
        report = complexity::bdm_grid(est, parse_grid(io::read_file(input)), d);
        kind = "grid";
      }
      io::ResultTable t;
      t.columns = {"input_kind", "value", "block_size", "distinct_blocks", "dropped_cells",
                   "fallback_blocks", "fallback_policy", "grid_mode"};
      t.rows.push_back({kind, report.value, static_cast<long long>(report.block_size),
                        static_cast<long long>(report.block_census.size()),
                        static_cast<long long>(report.dropped_cells),
                        static_cast<long long>(report.fallback_blocks),
                        complexity::to_string(report.fallback_policy), complexity::to_string(report.grid_mode)});
      sink.emit(io::export_results(t, result_format(g)),
                json{{"command", "bdm"}, {"table", table_path}, {"input", input}, {"d", d},
                     {"fallback_policy", policy}, {"grid_mode", grid_mode}});
    };
  });

  // ---- aid ----
  auto* aid_cmd = app.add_subcommand("aid", "Perturbation analysis");
  aid_cmd->require_subcommand(1);
  std::string grid_path, flip_text, replacement, impact_mode = "flip_all";
  long long replace_row = -1;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--table", table_path)->required()->check(CLI::ExistingFile);
    c->add_option("--grid", grid_path)->required()->check(CLI::ExistingFile);
    c->add_option("--d", d)->check(CLI::PositiveNumber);
    c->add_option("--fallback", policy)->check(CLI::IsMember({"error", "max_plus_one"}));
    c->add_option("--mode", grid_mode)->check(CLI::IsMember({"direct", "row-flatten"}));
  };

  auto* delta = aid_cmd->add_subcommand("delta", "Information delta of one perturbation");
  add_common(delta);
  auto* flip_opt = delta->add_option("--flip", flip_text, "Cells r,c[;r,c...] to flip");
  auto* row_opt = delta->add_option("--replace-row", replace_row);
  delta->add_option("--bits", replacement, "Replacement row for --replace-row");
  flip_opt->excludes(row_opt);
  delta->callback([&] {
    if (!flip_opt->count() && !row_opt->count()) throw CLI::RequiredError("--flip or --replace-row");
    action = [&] {
      const auto est = make_estimator(table_path, policy, grid_mode);
      check_grid_estimator(est);
      const BitGrid grid = parse_grid(io::read_file(grid_path));
      const aid::Perturbation p =
          flip_opt->count() ? aid::Perturbation::flip(parse_cells(flip_text))
                            : aid::Perturbation::replace_row(static_cast<std::size_t>(replace_row),
                                                             parse_bits(replacement));
      const auto report = aid::information_delta(est, grid, p, d);
      sink.emit(io::export_results(io::report_table({report}), result_format(g)),
                json{{"command", "aid delta"}, {"table", table_path}, {"grid", grid_path}, {"d", d},
                     {"flip", flip_text}, {"replace_row", replace_row}, {"bits", replacement}});
    };
  });

  auto impact_of = [&] {
    return impact_mode == "replace_random" ? aid::ImpactMode::replace_random(g.seed)
                                           : aid::ImpactMode::flip_all();
  };

  auto* profile = aid_cmd->add_subcommand("profile", "Per-row perturbation impact");
  add_common(profile);
  profile->add_option("--impact", impact_mode)->check(CLI::IsMember({"flip_all", "replace_random"}));
  profile->callback([&] {
    action = [&] {
      const auto est = make_estimator(table_path, policy, grid_mode);
      check_grid_estimator(est);
      const auto impacts = aid::row_impact_profile(est, parse_grid(io::read_file(grid_path)), d, impact_of());
      io::ResultTable t;
      t.columns = {"row", "impact"};
      for (std::size_t r = 0; r < impacts.size(); ++r) t.rows.push_back({static_cast<long long>(r), impacts[r]});
      sink.emit(io::export_results(t, result_format(g)),
                json{{"command", "aid profile"}, {"table", table_path}, {"grid", grid_path}, {"d", d},
                     {"impact", impact_mode}, {"grid_mode", grid_mode}});
    };
  });

  auto* order = aid_cmd->add_subcommand("order", "Reconstruct time order by impact");
  add_common(order);
  order->add_option("--impact", impact_mode)->check(CLI::IsMember({"flip_all", "replace_random"}));
  order->callback([&] {
    action = [&] {
      const auto est = make_estimator(table_path, policy, grid_mode);
      check_grid_estimator(est);
      const auto perm = aid::reconstruct_time_order(est, parse_grid(io::read_file(grid_path)), d, impact_of());
      io::ResultTable t;
      t.columns = {"position", "row"};
      for (std::size_t i = 0; i < perm.size(); ++i) {
        t.rows.push_back({static_cast<long long>(i), static_cast<long long>(perm[i])});
      }
      sink.emit(io::export_results(t, result_format(g)),
                json{{"command", "aid order"}, {"table", table_path}, {"grid", grid_path}, {"d", d},
                     {"impact", impact_mode}, {"grid_mode", grid_mode}});
    };
  });

  // ---- bench ----
  auto* bench_cmd = app.add_subcommand("bench", "ECA class-separation benchmark");
  bench_cmd->require_subcommand(1);
  std::string classes_path, results_path, measure;
  bench::BenchConfig cfg;
  std::string bench_init = "random";
  auto* bench_run = bench_cmd->add_subcommand("run", "Score all 256 rules");
  bench_run->add_option("--table", table_path)->required()->check(CLI::ExistingFile);
  bench_run->add_option("--classes", classes_path)->required()->check(CLI::ExistingFile);
  bench_run->add_option("--width", cfg.width)->check(CLI::PositiveNumber);
  bench_run->add_option("--steps", cfg.steps)->check(CLI::NonNegativeNumber);
  bench_run->add_option("--init", bench_init)->check(CLI::IsMember({"single", "random"}));
  bench_run->add_option("--d", cfg.block_size)->check(CLI::PositiveNumber);
  bench_run->add_option("--entropy-block", cfg.entropy_block)->check(CLI::PositiveNumber);
  bench_run->add_option("--fallback", policy)->check(CLI::IsMember({"error", "max_plus_one"}));
  bench_run->add_option("--mode", grid_mode)->check(CLI::IsMember({"direct", "row-flatten"}));
  bench_run->callback([&] {
    action = [&] {
      const auto est = make_estimator(table_path, policy, grid_mode);
      check_grid_estimator(est);
      std::ifstream classes_in(classes_path);
      const auto classes = bench::load_class_table(classes_in);
      cfg.seed = g.seed;
      cfg.threads = g.threads;
      cfg.initial = bench_init == "single" ? bench::InitialCondition::kSingleOne
                                           : bench::InitialCondition::kSeededRandom;
      const auto rows = bench::run_benchmark(cfg, est, classes);
      sink.emit(io::export_results(io::benchmark_table(rows), result_format(g)),
                json{{"command", "bench run"}, {"table", table_path}, {"classes", classes_path},
                     {"class_source", classes.source}, {"width", cfg.width}, {"steps", cfg.steps},
                     {"init", bench_init}, {"d", cfg.block_size}, {"entropy_block", cfg.entropy_block},
                     {"fallback_policy", policy}, {"grid_mode", grid_mode},
                     {"lzw_input", "row-major flattening"}, {"boundary", "cyclic"}});
    };
  });

  auto* bench_stats = bench_cmd->add_subcommand("stats", "Per-class summary of one measure");
  bench_stats->add_option("--results", results_path, "CSV written by bench run")->required()->check(CLI::ExistingFile);
  bench_stats->add_option("--measure", measure)->required();
  bench_stats->callback([&] {
    action = [&] {
      const auto stats = bench::class_stats(read_benchmark_csv(results_path), measure);
      sink.emit(io::export_results(io::class_stats_table(stats), result_format(g)),
                json{{"command", "bench stats"}, {"results", results_path}, {"measure", measure}});
    };
  });

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (action) action();
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace alab::cli
