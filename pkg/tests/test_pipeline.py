import io
import random
from dataclasses import fields
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphgen import random_plane_cubic
from hypocubic import pipeline
from hypocubic.codec import HEADER, PlanarCodeError, encode_planar_code_record, read_planar_code, write_planar_code, write_text_adjacency
from hypocubic.embedding import PlanarEmbedding
from hypocubic.fixtures import cube, dodecahedron, k4, petersen, prism
from hypocubic.graph import graph_from_adjacency
from hypocubic.hamilton import HamResult, find_hamiltonian
from hypocubic.hypo import classify_hypohamiltonian
from hypocubic.invariants import planar_cyclic_connectivity
from hypocubic.pipeline import (
    HYPO,
    NONHAM,
    CrossCheckError,
    PipelineConfig,
    PipelineCounters,
    RowCounts,
    classify_record,
    cross_verify,
    emit_table_row,
    process_stream,
)

DATA = Path(__file__).parent / "data"
NONHAM44 = DATA / "nonham44.pc"


def _write(path, embeddings):
    with open(path, "wb") as fh:
        write_planar_code(embeddings, fh)
    return path


@pytest.fixture
def mixed_input(tmp_path):
    """Dodecahedron, the two non-hamiltonian 44s, and graphs the filters reject."""
    with open(NONHAM44, "rb") as fh:
        nonham = list(read_planar_code(fh))
    embs = [k4(), dodecahedron(), nonham[0], cube(), prism(), nonham[1], dodecahedron()]
    return _write(tmp_path / "mixed.pc", embs)


def test_empty_input(tmp_path):
    path = _write(tmp_path / "empty.pc", [])
    counters = process_stream(PipelineConfig(inputs=[path], orders=(22,)))
    assert counters == PipelineCounters()
    assert emit_table_row(counters, 22) == "22 0 0 0 0 0"
    with pytest.raises(KeyError):
        emit_table_row(counters, 24)


def test_mixed_counts_and_survivors(mixed_input, tmp_path):
    out = tmp_path / "surv.pc"
    counters = process_stream(PipelineConfig(inputs=[mixed_input], survivors=out))
    r44, r20 = counters.rows[44], counters.rows[20]
    assert (r44.c4, r44.n4, r44.c5, r44.n5, r44.h) == (1, 1, 1, 1, 0)
    assert (r20.c5, r20.n5) == (2, 0)
    assert counters.rows[4].rejected_girth == 1
    assert counters.rows[8].rejected_girth == 1
    assert counters.rows[6].rejected_girth == 1
    for r in counters.rows.values():
        assert r.c4 + r.c5 + r.rejected == r.total
        assert r.n4 <= r.c4 and r.n5 <= r.c5 and r.h <= r.n4 + r.n5
    with open(NONHAM44, "rb") as fh:
        assert out.read_bytes() == fh.read()


def test_survivors_reclassify(mixed_input, tmp_path):
    out = tmp_path / "surv.pc"
    process_stream(PipelineConfig(inputs=[mixed_input], survivors=out))
    survivors = list(read_planar_code(io.BytesIO(out.read_bytes())))
    assert len(survivors) == 2
    for e in survivors:
        assert not find_hamiltonian(e.graph).is_hamiltonian


def test_emit_hypo_only(mixed_input, tmp_path):
    out = tmp_path / "surv.pc"
    process_stream(PipelineConfig(inputs=[mixed_input], survivors=out, emit=frozenset({HYPO})))
    assert out.read_bytes() == HEADER


def test_text_and_planar_code_inputs_agree(mixed_input, tmp_path):
    with open(mixed_input, "rb") as fh:
        embs = list(read_planar_code(fh))
    text = tmp_path / "mixed.txt"
    with open(text, "w", encoding="utf-8") as fh:
        write_text_adjacency(embs, fh)
    a = process_stream(PipelineConfig(inputs=[mixed_input]))
    b = process_stream(PipelineConfig(inputs=[text], format="text"))
    assert a == b


def test_jobs_and_batches_do_not_change_results(mixed_input, tmp_path):
    runs = []
    for jobs, batch in ((1, 256), (1, 1), (3, 1), (2, 2)):
        out = tmp_path / f"s{jobs}_{batch}.pc"
        c = process_stream(PipelineConfig(inputs=[mixed_input, mixed_input], survivors=out, jobs=jobs, batch_size=batch))
        runs.append((c, out.read_bytes()))
    assert all(r == runs[0] for r in runs)


def test_grinberg_and_verify_rate(mixed_input):
    counters = process_stream(PipelineConfig(inputs=[mixed_input], grinberg=True, verify_rate=1.0))
    r44 = counters.rows[44]
    assert r44.cross_checked == 2
    assert counters.rows[20].cross_checked == 2
    # these non-hamiltonian graphs are not excluded by Grinberg's condition
    assert r44.grinberg_certified == 0


def test_skip_bad(tmp_path):
    bad = bytes([3, 2, 3, 0, 1, 0, 1, 2, 0])
    path = tmp_path / "bad.pc"
    path.write_bytes(HEADER + encode_planar_code_record(dodecahedron()) + bad)
    with pytest.raises(PlanarCodeError):
        process_stream(PipelineConfig(inputs=[path]))
    counters = process_stream(PipelineConfig(inputs=[path], skip_bad=True))
    assert counters.skipped == 1 and counters.rows[20].c5 == 1


def test_config_validation():
    with pytest.raises(ValueError):
        PipelineConfig(jobs=0)
    with pytest.raises(ValueError):
        PipelineConfig(verify_rate=1.5)
    with pytest.raises(ValueError):
        PipelineConfig(format="graph6")
    with pytest.raises(ValueError):
        PipelineConfig(emit=frozenset({"all"}))


def test_sampling_is_deterministic():
    picks = [pipeline._sampled(i, 0.1) for i in range(10_000)]
    assert picks == [pipeline._sampled(i, 0.1) for i in range(10_000)]
    assert 800 < sum(picks) < 1200
    assert not any(pipeline._sampled(i, 0.0) for i in range(100))
    assert all(pipeline._sampled(i, 1.0) for i in range(100))


# counters


def _counters(draw_rows):
    return PipelineCounters({n: RowCounts(*vals) for n, vals in draw_rows.items()})


counter_values = st.dictionaries(
    st.sampled_from([20, 22, 44, 76]),
    st.tuples(*[st.integers(0, 1000) for _ in fields(RowCounts)]),
    max_size=4,
).map(_counters)


@given(counter_values, counter_values, counter_values)
def test_merge_is_a_commutative_monoid(a, b, c):
    assert a.merge(b) == b.merge(a)
    assert a.merge(b).merge(c) == a.merge(b.merge(c))
    assert a.merge(PipelineCounters()) == a
    assert PipelineCounters({20: RowCounts()}) == PipelineCounters()


# cross verification


def test_cross_verify_examples():
    p = petersen()
    assert cross_verify(p, find_hamiltonian(p), classify_hypohamiltonian(p))
    assert cross_verify(k4().graph, find_hamiltonian(k4().graph))


def test_cross_verify_fault_injection():
    g = k4().graph
    flipped = HamResult(None, 0)
    with pytest.raises(CrossCheckError) as info:
        cross_verify(g, flipped)
    assert info.value.reproducer == encode_planar_code_record(g)
    assert encode_planar_code_record(g).hex() in str(info.value)


def test_cross_verify_large_uses_second_solver(monkeypatch):
    g = random_plane_cubic(40, random.Random(1))
    monkeypatch.setattr(pipeline, "reference_is_hamiltonian", lambda _: pytest.fail("oracle used above the limit"))
    assert cross_verify(g, find_hamiltonian(g))
    with pytest.raises(CrossCheckError):
        cross_verify(g, HamResult(None, 0))


def test_classify_record_aborts_on_disagreement(monkeypatch):
    monkeypatch.setattr(pipeline, "reference_is_hamiltonian", lambda _: False)
    rec = encode_planar_code_record(dodecahedron())
    cfg = PipelineConfig(verify_rate=1.0)
    with pytest.raises(CrossCheckError):
        classify_record(rec, 0, 0, cfg)


def test_classify_record_buckets():
    cfg = PipelineConfig(emit=frozenset({NONHAM, HYPO}))
    n, row, classes = classify_record(encode_planar_code_record(dodecahedron()), 0, 0, cfg)
    assert (n, row.c5, row.h, classes) == (20, 1, 0, set())
    with open(NONHAM44, "rb") as fh:
        for e in read_planar_code(fh):
            n, row, classes = classify_record(encode_planar_code_record(e), 0, 0, cfg)
            bucket = planar_cyclic_connectivity(e).value
            assert getattr(row, f"n{bucket}") == 1 and classes == {NONHAM}


def test_non_cubic_records_are_rejected():
    g = random_plane_cubic(20, random.Random(3))
    adj = [list(a) for a in g.adjacency]
    u = 0
    v = adj[0][0]
    adj[u].remove(v)
    adj[v].remove(u)
    rec = encode_planar_code_record(PlanarEmbedding(graph_from_adjacency(adj)))
    n, row, _ = classify_record(rec, 0, 0, PipelineConfig())
    assert row.rejected_degree == 1 and row.total == 1
