import os
import pathlib

import pytest

import algorand_lab as alab

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


@pytest.fixture(scope="module")
def table22():
    return alab.build_ctm_table(2)


def test_eca_basics():
    assert alab.evolve(90, "00100", 1) == ["00100", "01010"]
    assert alab.langton_lambda(0) == 0.0
    assert alab.langton_lambda(255) == 1.0
    s = alab.simplify(110)
    assert s["icon_count"] == 5
    assert alab.simplify(204)["icons"] == ["*1*->1", "*0*->0"]


def test_ctm_table(table22):
    assert table22.total_machines == 10000
    assert table22.total_halting == 3044
    assert len(table22) == 17
    assert table22.count("0") == 1000
    assert alab.loads_ctm_table(table22.save()) == table22


def test_shards_merge(table22):
    a = alab.build_ctm_table(2, range=(0, 4000))
    b = alab.build_ctm_table(2, range=(4000, 10000), threads=4)
    assert alab.merge_ctm_tables(b, a) == table22
    with pytest.raises(alab.Error) as info:
        alab.merge_ctm_tables(a, table22)
    assert info.value.code == "OverlappingRanges"


def test_estimates(table22):
    est = alab.Estimator(table22)
    assert est.ctm("0") == pytest.approx(1.6059683588414584, abs=1e-12)
    report = est.bdm("01" * 8, 4)
    assert report["block_size"] == 4
    assert report["distinct_blocks"] == 1
    strict = alab.Estimator(table22, fallback="error")
    with pytest.raises(alab.Error):
        strict.ctm("0000")
    assert alab.lzw_compress("0000") == ([0, 2, 0], 5)
    assert alab.shannon_entropy("0101", 1) == pytest.approx(1.0, abs=1e-12)


def test_perturbation():
    table = alab.build_ctm_table(3, complement_completion=True)
    est = alab.Estimator(table, mode="row-flatten")
    rows = alab.evolve(30, "0" * 16 + "1" + "0" * 15, 31)
    noop = alab.information_delta(est, rows, 4, replace_row=3, bits=rows[3])
    assert noop["delta"] == 0.0
    assert noop["classification"] == "neutral"
    flipped = alab.information_delta(est, rows, 4, flip=[(0, 0)])
    assert flipped["threshold"] == pytest.approx(10.0)
    order = alab.reconstruct_time_order(est, rows, 4, impact="replace_random", seed=1)
    assert sorted(order) == list(range(32))


def test_benchmark_and_cli(table22):
    est = alab.Estimator(alab.build_ctm_table(3, complement_completion=True), mode="row-flatten")
    rows = alab.run_benchmark(est, str(DATA / "wolfram_classes.csv"), width=40, steps=40)
    assert len(rows) == 256
    assert rows[30]["class"] == 3
    code, out, _ = alab.run_cli(["eca", "lambda", "--all"])
    assert code == 0
    assert len(out.splitlines()) == 257
    code, _, err = alab.run_cli(["eca", "lambda", "--rule", "999"])
    assert code == 1
