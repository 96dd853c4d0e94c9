import pytest

from hopdomlab.graph import is_regular
from hopdomlab.solvers import Problem
from hopdomlab.reductions import ReductionFamily, ReductionKind
from hopdomlab.verify import (CorpusSpec, enumerate_corpus, named_graph,
                              random_regular_graph, run_verification)

HD = Problem.HOP_DOM
SD = Problem.TWO_STEP_DOM
F = ReductionFamily


def test_connected_counts(corpus5):
    from collections import Counter
    counts = Counter(g.n for g in corpus5)
    assert counts == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21}


def test_named_graphs():
    assert named_graph("K4").m == 6
    assert named_graph("C5").m == 5
    assert named_graph("P4").m == 3
    assert named_graph("K3,3").m == 9
    pet = named_graph("petersen")
    assert pet.n == 10 and is_regular(pet, 3)
    q3 = named_graph("Q3")
    assert q3.n == 8 and is_regular(q3, 3)
    with pytest.raises(ValueError):
        named_graph("what")


def test_corpus_spec_validation():
    with pytest.raises(ValueError):
        CorpusSpec(mode="exhaustive", n_max=9)
    with pytest.raises(ValueError):
        CorpusSpec(mode="random-regular", n=8, d=3, count=2)  # no seed
    with pytest.raises(ValueError):
        CorpusSpec(mode="bogus")


def test_enumerate_named_and_filters():
    spec = CorpusSpec(mode="named", names=("K4", "P3", "petersen"),
                      filters=("3-regular",))
    out = enumerate_corpus(spec)
    assert [name for name, _ in out] == ["K4", "petersen"]
    spec = CorpusSpec(mode="named", names=("K4", "K5"), filters=("planar-deg4",))
    assert [name for name, _ in enumerate_corpus(spec)] == ["K4"]


def test_random_regular_deterministic():
    spec = CorpusSpec(mode="random-regular", n=8, d=3, count=5, seed=7)
    a = enumerate_corpus(spec)
    b = enumerate_corpus(spec)
    assert len(a) == 5
    assert all(is_regular(g, 3) for _, g in a)
    assert all(x[1].adjacency == y[1].adjacency for x, y in zip(a, b))


def test_empty_report_passes():
    rep = run_verification([], [ReductionKind(HD, F.THREE_REGULAR)])
    assert rep.passed and rep.rows == ()


def test_k2_dreg_row_example():
    corpus = enumerate_corpus(CorpusSpec(mode="named", names=("K2",)))
    rep = run_verification(corpus, [ReductionKind(HD, F.D_REGULAR, 4)])
    row = rep.rows[0]
    assert (row.tau, row.gamma, row.offset, row.status) == (1, 2, 1, "PASS")
    assert row.passed


def test_failing_row_is_data_not_exception():
    # the 2-step d-regular identity genuinely fails on K2
    corpus = enumerate_corpus(CorpusSpec(mode="named", names=("K2",)))
    rep = run_verification(corpus, [ReductionKind(SD, F.D_REGULAR, 4)])
    row = rep.rows[0]
    assert row.status == "FAIL" and not rep.passed
    assert row.gamma == 4 and row.expected == 3
    assert row.cert_ok is False
    assert row.source_edges == "0-1"


def test_unit_disk_rows_skip_nonplanar():
    corpus = enumerate_corpus(CorpusSpec(mode="named", names=("petersen", "K2")))
    rep = run_verification(corpus, [ReductionKind(HD, F.UNIT_DISK)],
                           time_budget_per_row=120)
    by_name = {r.graph_name: r for r in rep.rows}
    assert by_name["petersen"].status == "SKIPPED"
    assert by_name["K2"].status == "PASS"
    assert rep.passed  # skipped is not a failure
    assert rep.counts["SKIPPED"] == 1


def test_report_determinism_and_tsv():
    corpus = enumerate_corpus(CorpusSpec(mode="named", names=("K2", "P3")))
    kinds = [ReductionKind(HD, F.D_REGULAR, 4), ReductionKind(HD, F.CLAW_FREE)]
    rep1 = run_verification(corpus, kinds)
    rep2 = run_verification(corpus, kinds)
    strip = lambda rep: [
        "\t".join(line.split("\t")[:13]) for line in rep.to_tsv().splitlines()]
    assert strip(rep1) == strip(rep2)  # identical apart from wall-clock columns
    tsv = rep1.to_tsv()
    assert tsv.startswith("# hopdomlab-verify v1")
    assert len(tsv.splitlines()) == 2 + len(rep1.rows)
    text = rep1.to_text()
    assert "summary: 4 pass, 0 fail" in text


def test_rows_keep_corpus_order_with_threads():
    corpus = enumerate_corpus(CorpusSpec(mode="named", names=("K2", "P3", "C4")))
    kinds = [ReductionKind(HD, F.D_REGULAR, 4)]
    rep = run_verification(corpus, kinds, threads=4)
    assert [r.graph_name for r in rep.rows] == ["K2", "P3", "C4"]
