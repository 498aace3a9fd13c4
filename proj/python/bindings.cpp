// Python bindings. Bit strings cross the boundary as "0101" text and grids as
// lists of row strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "alab/aid.h"
#include "alab/bench.h"
#include "alab/bits.h"
#include "alab/cli.h"
#include "alab/complexity.h"
#include "alab/eca.h"
#include "alab/error.h"
#include "alab/io.h"
#include "alab/turing.h"

namespace py = pybind11;
using namespace alab;

namespace {

using Rows = std::vector<std::string>;
using TablePtr = std::shared_ptr<const turing::CtmTable>;

BitGrid grid_from_rows(const Rows& rows) {
  std::vector<BitString> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(parse_bits(r));
  return BitGrid::from_rows(parsed);
}

Rows rows_from_grid(const BitGrid& g) {
  Rows rows;
  for (std::size_t r = 0; r < g.rows(); ++r) rows.push_back(format_bits(g.row_span(r)));
  return rows;
}

complexity::FallbackPolicy parse_policy(const std::string& s) {
  if (s == "error") return complexity::FallbackPolicy::kError;
  if (s == "max_plus_one") return complexity::FallbackPolicy::kMaxPlusOne;
  throw Error(ErrorCode::kInvalidArgument, "fallback must be 'error' or 'max_plus_one'");
}

complexity::GridMode parse_mode(const std::string& s) {
  if (s == "direct") return complexity::GridMode::kDirect;
  if (s == "row-flatten") return complexity::GridMode::kRowFlatten;
  throw Error(ErrorCode::kInvalidArgument, "mode must be 'direct' or 'row-flatten'");
}

aid::ImpactMode parse_impact(const std::string& s, std::uint64_t seed) {
  if (s == "flip_all") return aid::ImpactMode::flip_all();
  if (s == "replace_random") return aid::ImpactMode::replace_random(seed);
  throw Error(ErrorCode::kInvalidArgument, "impact must be 'flip_all' or 'replace_random'");
}

std::string object_key(const turing::CtmTable& t, const BitGrid& g) {
  if (t.dimensionality == turing::Dimensionality::k1D) return format_bits(g.cells());
  return std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + ":" + format_bits(g.cells());
}

py::dict report_dict(const complexity::BdmReport& r) {
  py::dict d;
  d["value"] = r.value;
  d["block_size"] = r.block_size;
  d["distinct_blocks"] = r.block_census.size();
  d["dropped_cells"] = r.dropped_cells;
  d["fallback_blocks"] = r.fallback_blocks;
  d["fallback_policy"] = complexity::to_string(r.fallback_policy);
  d["grid_mode"] = complexity::to_string(r.grid_mode);
  return d;
}

}  // namespace

PYBIND11_MODULE(_alab, m) {
  m.doc() = "Algorithmic complexity estimation: CTM, BDM, ECA simplification and perturbation analysis";

  // alab.Error(ValueError) carries the error name in `.code`.
  static PyObject* error_type = PyErr_NewException("algorand_lab.Error", PyExc_ValueError, nullptr);
  m.add_object("Error", py::reinterpret_borrow<py::object>(error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(error_type)(e.what());
      err.attr("code") = std::string(error_name(e.code()));
      PyErr_SetObject(error_type, err.ptr());
    }
  });

  // ---- eca ----
  m.def("evolve", [](int rule, const std::string& initial, int steps) {
    return rows_from_grid(eca::evolve(eca::rule_from_number(rule), parse_bits(initial), steps));
  }, py::arg("rule"), py::arg("initial"), py::arg("steps"));
  m.def("interact", [](int left, int right, const std::string& initial, int steps, std::size_t split) {
    return rows_from_grid(eca::interact(eca::rule_from_number(left), eca::rule_from_number(right),
                                        parse_bits(initial), steps, split));
  }, py::arg("left"), py::arg("right"), py::arg("initial"), py::arg("steps"), py::arg("split"));
  m.def("langton_lambda", [](int rule) { return eca::lambda(eca::rule_from_number(rule)); }, py::arg("rule"));
  m.def("simplify", [](int rule) {
    const auto s = eca::simplify(eca::rule_from_number(rule));
    py::dict d;
    std::vector<std::string> icons;
    for (const auto& icon : s.icons) icons.push_back(icon.to_string());
    d["rule"] = s.rule_number;
    d["icons"] = icons;
    d["icon_count"] = s.icon_count;
    d["specified_cells"] = s.specified_cells;
    d["bits"] = eca::simplified_bits(s);
    return d;
  }, py::arg("rule"));

  // ---- turing ----
  py::class_<turing::CtmTable, std::shared_ptr<turing::CtmTable>>(m, "CtmTable")
      .def_readonly("states", &turing::CtmTable::states)
      .def_readonly("cutoff", &turing::CtmTable::cutoff)
      .def_readonly("total_machines", &turing::CtmTable::total_machines)
      .def_readonly("total_halting", &turing::CtmTable::total_halting)
      .def_readonly("complement_completed", &turing::CtmTable::complement_completed)
      .def_property_readonly("counts", [](const turing::CtmTable& t) {
        std::map<std::string, std::uint64_t> out;
        for (const auto& [g, n] : t.counts) out[object_key(t, g)] = n;
        return out;
      })
      .def("count", [](const turing::CtmTable& t, const std::string& s) { return t.count(parse_bits(s)); })
      .def("save", [](const turing::CtmTable& t) { return io::save_ctm_table(t); })
      .def("__eq__", [](const turing::CtmTable& a, const turing::CtmTable& b) { return a == b; })
      .def("__len__", [](const turing::CtmTable& t) { return t.counts.size(); });

  auto share = [](turing::CtmTable t) { return std::make_shared<turing::CtmTable>(std::move(t)); };
  m.def("build_ctm_table", [share](int states, std::optional<std::uint64_t> cutoff,
                                   std::optional<std::pair<std::uint64_t, std::uint64_t>> range,
                                   unsigned threads, bool complement_completion) {
    turing::TmSpace space{states, 0};
    if (cutoff) {
      space.cutoff = *cutoff;
    } else if (auto c = turing::default_cutoff(states)) {
      space.cutoff = *c;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "no default cutoff for " + std::to_string(states) + " states");
    }
    std::optional<turing::IndexRange> r;
    if (range) r = turing::IndexRange{range->first, range->second};
    turing::CtmTable t;
    {
      py::gil_scoped_release release;
      t = turing::build_ctm_table(space, r, threads);
    }
    if (complement_completion) t = turing::complement_complete(t);
    return share(std::move(t));
  }, py::arg("states"), py::arg("cutoff") = py::none(), py::arg("range") = py::none(), py::arg("threads") = 1,
     py::arg("complement_completion") = false);
  m.def("build_ctm_sampled", [share](int states, std::uint64_t cutoff, std::uint64_t samples, std::uint64_t seed) {
    return share(turing::build_ctm_sampled({states, cutoff}, samples, seed));
  }, py::arg("states"), py::arg("cutoff"), py::arg("samples"), py::arg("seed"));
  m.def("complement_complete", [share](const turing::CtmTable& t) { return share(turing::complement_complete(t)); });
  m.def("merge_ctm_tables", [share](const turing::CtmTable& a, const turing::CtmTable& b) {
    return share(turing::merge_ctm_tables(a, b));
  });
  m.def("load_ctm_table", [share](const std::string& path) {
    return share(io::load_ctm_table(std::filesystem::path(path)));
  }, py::arg("path"));
  m.def("loads_ctm_table", [share](const std::string& text) {
    std::istringstream in(text);
    return share(io::load_ctm_table(in));
  }, py::arg("text"));
  m.def("machine_count", [](int states) { return turing::machine_count({states, 1}); }, py::arg("states"));

  // ---- complexity ----
  py::class_<complexity::CtmEstimator>(m, "Estimator")
      .def(py::init([](std::shared_ptr<turing::CtmTable> t, const std::string& fallback, const std::string& mode) {
             return complexity::CtmEstimator(TablePtr(std::move(t)), parse_policy(fallback), parse_mode(mode));
           }),
           py::arg("table"), py::arg("fallback") = "max_plus_one", py::arg("mode") = "direct")
      .def("ctm", [](const complexity::CtmEstimator& est, const std::string& s) {
        return complexity::ctm_value(est, parse_bits(s));
      }, py::arg("s"))
      .def("bdm", [](const complexity::CtmEstimator& est, const std::string& s, int block) {
        return report_dict(complexity::bdm_string(est, parse_bits(s), block));
      }, py::arg("s"), py::arg("block"))
      .def("bdm_grid", [](const complexity::CtmEstimator& est, const Rows& rows, int d) {
        return report_dict(complexity::bdm_grid(est, grid_from_rows(rows), d));
      }, py::arg("rows"), py::arg("d") = 4)
      .def_property_readonly("max_value", &complexity::CtmEstimator::max_value);

  m.def("lzw_compress", [](const std::string& s) {
    const auto r = complexity::lzw_compress(parse_bits(s));
    return py::make_tuple(r.codes, r.bit_length);
  }, py::arg("s"));
  m.def("shannon_entropy", [](const std::string& s, int block) {
    return complexity::shannon_block_entropy(parse_bits(s), block);
  }, py::arg("s"), py::arg("block") = 1);

  // ---- aid ----
  m.def("information_delta", [](const complexity::CtmEstimator& est, const Rows& rows, int d,
                                std::vector<std::pair<std::size_t, std::size_t>> flip,
                                std::optional<std::size_t> replace_row, std::optional<std::string> bits) {
    aid::Perturbation p;
    if (replace_row) {
      if (!bits) throw Error(ErrorCode::kInvalidArgument, "replace_row needs bits");
      p = aid::Perturbation::replace_row(*replace_row, parse_bits(*bits));
    } else {
      p = aid::Perturbation::flip(std::move(flip));
    }
    const auto r = aid::information_delta(est, grid_from_rows(rows), p, d);
    py::dict out;
    out["delta"] = r.delta;
    out["threshold"] = r.threshold;
    out["classification"] = aid::to_string(r.classification);
    out["original_bdm"] = r.original_bdm;
    out["perturbed_bdm"] = r.perturbed_bdm;
    return out;
  }, py::arg("estimator"), py::arg("rows"), py::arg("d") = 4,
     py::arg("flip") = std::vector<std::pair<std::size_t, std::size_t>>{}, py::arg("replace_row") = py::none(),
     py::arg("bits") = py::none());
  m.def("row_impact_profile", [](const complexity::CtmEstimator& est, const Rows& rows, int d,
                                 const std::string& impact, std::uint64_t seed) {
    return aid::row_impact_profile(est, grid_from_rows(rows), d, parse_impact(impact, seed));
  }, py::arg("estimator"), py::arg("rows"), py::arg("d") = 4, py::arg("impact") = "flip_all",
     py::arg("seed") = 1);
  m.def("reconstruct_time_order", [](const complexity::CtmEstimator& est, const Rows& rows, int d,
                                     const std::string& impact, std::uint64_t seed) {
    return aid::reconstruct_time_order(est, grid_from_rows(rows), d, parse_impact(impact, seed));
  }, py::arg("estimator"), py::arg("rows"), py::arg("d") = 4, py::arg("impact") = "flip_all",
     py::arg("seed") = 1);

  // ---- bench ----
  m.def("run_benchmark", [](const complexity::CtmEstimator& est, const std::string& classes_path, int width,
                            int steps, std::uint64_t seed, const std::string& initial, int d, int entropy_block,
                            unsigned threads) {
    std::ifstream in(classes_path);
    if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + classes_path);
    const auto classes = bench::load_class_table(in);
    bench::BenchConfig cfg;
    cfg.width = width;
    cfg.steps = steps;
    cfg.seed = seed;
    if (initial == "single") {
      cfg.initial = bench::InitialCondition::kSingleOne;
    } else if (initial != "random") {
      throw Error(ErrorCode::kInvalidArgument, "initial must be 'random' or 'single'");
    }
    cfg.block_size = d;
    cfg.entropy_block = entropy_block;
    cfg.threads = threads;
    std::vector<bench::BenchmarkRow> rows;
    {
      py::gil_scoped_release release;
      rows = bench::run_benchmark(cfg, est, classes);
    }
    py::list out;
    for (const auto& r : rows) {
      py::dict d;
      d["rule"] = r.rule;
      d["class"] = r.wolfram_class;
      d["lambda"] = r.lambda;
      d["simplified_icons"] = r.simplified_icons;
      d["simplified_bits"] = r.simplified_bits;
      d["lzw_bits"] = r.lzw_bits;
      d["entropy"] = r.entropy;
      d["bdm"] = r.bdm;
      out.append(d);
    }
    return out;
  }, py::arg("estimator"), py::arg("classes_path"), py::arg("width") = 100, py::arg("steps") = 100,
     py::arg("seed") = 1, py::arg("initial") = "random", py::arg("d") = 4, py::arg("entropy_block") = 4,
     py::arg("threads") = 1);

  // ---- cli ----
  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "alab");
    std::ostringstream out, err;
    const int code = cli::run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
