"""Streaming census: decode, filter, classify, count, and write survivors.

One reader frames records, a pool of workers classifies batches of them, and
the main process folds the per-batch counters and writes survivors in input
order.  Any worker count gives the same counters and the same survivor bytes.
"""

from __future__ import annotations

import logging
import zlib
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import BinaryIO

from hypocubic.codec import (
    HEADER,
    PlanarCodeError,
    decode_planar_code_record,
    encode_planar_code_record,
    iter_planar_code_records,
    read_text_adjacency,
)
from hypocubic.graph import Graph, delete_vertex
from hypocubic.grinberg import grinberg_feasible
from hypocubic.hamilton import HamResult, find_hamiltonian, find_hamiltonian_avoiding, reference_is_hamiltonian
from hypocubic.hypo import HypoResult, classify_hypohamiltonian
from hypocubic.invariants import faces, girth, planar_cyclic_connectivity

log = logging.getLogger(__name__)

NONHAM = "nonham"
HYPO = "hypo"
REFERENCE_LIMIT = 24


class CrossCheckError(RuntimeError):
    """Two independent hamiltonicity deciders disagreed; ``reproducer`` is planar_code."""

    def __init__(self, message: str, reproducer: bytes):
        super().__init__(f"{message}; reproducer (planar_code, hex): {reproducer.hex()}")
        self.reproducer = reproducer


@dataclass
class RowCounts:
    total: int = 0
    c4: int = 0
    n4: int = 0
    c5: int = 0
    n5: int = 0
    h: int = 0
    unclassified: int = 0
    n_unclassified: int = 0
    rejected_degree: int = 0
    rejected_girth: int = 0
    rejected_cyclic: int = 0
    grinberg_certified: int = 0
    cross_checked: int = 0

    @property
    def rejected(self) -> int:
        return self.rejected_degree + self.rejected_girth + self.rejected_cyclic

    def merge(self, other: RowCounts) -> RowCounts:
        return RowCounts(**{f.name: getattr(self, f.name) + getattr(other, f.name) for f in fields(self)})


@dataclass
class PipelineCounters:
    """Census tallies per vertex count.  ``merge`` is associative and commutative."""

    rows: dict[int, RowCounts] = field(default_factory=dict)
    skipped: int = 0

    def row(self, n: int) -> RowCounts:
        if n not in self.rows:
            self.rows[n] = RowCounts()
        return self.rows[n]

    def merge(self, other: PipelineCounters) -> PipelineCounters:
        rows = {n: RowCounts().merge(r) for n, r in self.rows.items()}
        for n, r in other.rows.items():
            rows[n] = rows[n].merge(r) if n in rows else RowCounts().merge(r)
        return PipelineCounters(rows, self.skipped + other.skipped)

    def _nonzero_rows(self) -> dict[int, RowCounts]:
        return {n: r for n, r in self.rows.items() if r != RowCounts()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, PipelineCounters):
            return NotImplemented
        return self._nonzero_rows() == other._nonzero_rows() and self.skipped == other.skipped


@dataclass
class PipelineConfig:
    inputs: list[Path] = field(default_factory=list)
    format: str = "planar_code"
    header: bool = True
    min_girth: int = 5
    classify_cyclic: bool = True
    jobs: int = 1
    survivors: Path | None = None
    emit: frozenset[str] = frozenset({NONHAM})
    verify_rate: float = 0.0
    grinberg: bool = False
    skip_bad: bool = False
    batch_size: int = 256
    orders: tuple[int, ...] = ()

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if not 0.0 <= self.verify_rate <= 1.0:
            raise ValueError("verify rate must lie in [0, 1]")
        if self.format not in ("planar_code", "text"):
            raise ValueError(f"unknown format {self.format!r}")
        unknown = set(self.emit) - {NONHAM, HYPO}
        if unknown:
            raise ValueError(f"unknown survivor classes {sorted(unknown)}")


def _sampled(ordinal: int, rate: float) -> bool:
    if rate <= 0.0:
        return False
    return zlib.crc32(ordinal.to_bytes(8, "little")) < rate * 2**32


def cross_verify(g: Graph, primary: HamResult, hypo: HypoResult | None = None, *, reproducer: bytes = b"") -> bool:
    """Re-decide ``g`` (and ``g - v`` for a hypohamiltonian claim) independently.

    Graphs up to 24 vertices go to the naive backtracking oracle; larger ones
    to a second solver run with the branching tie-break reversed.  Returns True
    on agreement and raises :class:`CrossCheckError` otherwise.
    """
    if not reproducer:
        reproducer = encode_planar_code_record(g)
    small = g.vertex_count <= REFERENCE_LIMIT

    def decide(v: int | None) -> bool:
        if small:
            return reference_is_hamiltonian(g if v is None else delete_vertex(g, v))
        if v is None:
            return find_hamiltonian(g, reverse_ties=True).is_hamiltonian
        return find_hamiltonian_avoiding(g, v, reverse_ties=True).is_hamiltonian

    if decide(None) != primary.is_hamiltonian:
        raise CrossCheckError(
            f"hamiltonicity disagreement: primary says {primary.is_hamiltonian}", reproducer
        )
    if hypo is not None and hypo.is_hypohamiltonian:
        for v in range(g.vertex_count):
            if not decide(v):
                raise CrossCheckError(f"vertex-deleted graph g-{v} is not hamiltonian", reproducer)
    return True


def classify_record(record: bytes, ordinal: int, offset: int, cfg: PipelineConfig) -> tuple[int, RowCounts, set[str]]:
    """Classify one planar_code record; returns (n, its tallies, survivor classes)."""
    e = decode_planar_code_record(record, ordinal=ordinal, offset=offset)
    g = e.graph
    n = g.vertex_count
    row = RowCounts(total=1)
    if not g.is_cubic():
        row.rejected_degree = 1
        return n, row, set()
    fv = faces(e)
    if not fv.identities_hold(n, g.edge_count):
        raise PlanarCodeError("face vector violates the Euler identities", ordinal, offset)
    gi = girth(g)
    if gi is None or gi < cfg.min_girth:
        row.rejected_girth = 1
        return n, row, set()
    cc = None
    if cfg.classify_cyclic:
        cc = planar_cyclic_connectivity(e).value
        if cc not in (4, 5):
            row.rejected_cyclic = 1
            return n, row, set()
    bucket = {4: "c4", 5: "c5", None: "unclassified"}[cc]
    setattr(row, bucket, 1)

    ham = find_hamiltonian(g)
    if cfg.grinberg and not grinberg_feasible(fv):
        row.grinberg_certified = 1
        if ham.is_hamiltonian:
            raise CrossCheckError("Grinberg infeasible but a hamiltonian cycle was found", record)
    classes: set[str] = set()
    hypo = None
    if not ham.is_hamiltonian:
        setattr(row, {4: "n4", 5: "n5", None: "n_unclassified"}[cc], 1)
        classes.add(NONHAM)
        hypo = classify_hypohamiltonian(g, known_nonhamiltonian=ham)
        if hypo.is_hypohamiltonian:
            if not hypo.verify(g):
                raise CrossCheckError("hypohamiltonian certificate failed verification", record)
            if cfg.classify_cyclic and (cc is None or cc < 4):
                raise CrossCheckError(f"hypohamiltonian graph with cyclic connectivity {cc}", record)
            row.h = 1
            classes.add(HYPO)
    if (hypo is not None and hypo.is_hypohamiltonian) or _sampled(ordinal, cfg.verify_rate):
        cross_verify(g, ham, hypo, reproducer=record)
        row.cross_checked = 1
    return n, row, classes & cfg.emit


def _run_batch(batch: list[tuple[int, int, bytes]], cfg: PipelineConfig):
    counters = PipelineCounters()
    survivors = []
    for ordinal, offset, record in batch:
        try:
            n, row, classes = classify_record(record, ordinal, offset, cfg)
        except PlanarCodeError as exc:
            if not cfg.skip_bad:
                raise
            log.warning("skipping bad record: %s", exc)
            counters.skipped += 1
            continue
        counters.rows[n] = counters.row(n).merge(row)
        if classes:
            survivors.append((ordinal, record))
    return counters, survivors


def _records(cfg: PipelineConfig) -> Iterator[tuple[int, int, bytes]]:
    ordinal = 0
    for path in cfg.inputs:
        if cfg.format == "planar_code":
            with open(path, "rb") as fh:
                for offset, rec in iter_planar_code_records(fh, header=cfg.header):
                    yield ordinal, offset, rec
                    ordinal += 1
        else:
            with open(path, encoding="utf-8") as fh:
                for g in read_text_adjacency(fh):
                    yield ordinal, 0, encode_planar_code_record(g)
                    ordinal += 1


def _batches(records: Iterable[tuple[int, int, bytes]], size: int) -> Iterator[list[tuple[int, int, bytes]]]:
    batch = []
    for r in records:
        batch.append(r)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def _ordered_results(cfg: PipelineConfig, batches: Iterator[list]) -> Iterator:
    if cfg.jobs == 1:
        for b in batches:
            yield _run_batch(b, cfg)
        return
    import multiprocessing

    window = 4 * cfg.jobs
    with multiprocessing.Pool(cfg.jobs) as pool:
        pending: deque = deque()
        for b in batches:
            pending.append(pool.apply_async(_run_batch, (b, cfg)))
            if len(pending) >= window:
                yield pending.popleft().get()
        while pending:
            yield pending.popleft().get()


def process_stream(cfg: PipelineConfig, records: Iterable[tuple[int, int, bytes]] | None = None) -> PipelineCounters:
    """Run the census over ``cfg.inputs`` (or over pre-framed ``records``)."""
    source = _records(cfg) if records is None else records
    counters = PipelineCounters({n: RowCounts() for n in cfg.orders})
    out: BinaryIO | None = open(cfg.survivors, "wb") if cfg.survivors else None
    try:
        if out:
            out.write(HEADER)
        for batch_counters, survivors in _ordered_results(cfg, _batches(source, cfg.batch_size)):
            counters = counters.merge(batch_counters)
            if out:
                for _, rec in survivors:
                    out.write(rec)
    finally:
        if out:
            out.close()
    for n in sorted(counters.rows):
        r = counters.rows[n]
        log.info("n=%d total=%d C4=%d N4=%d C5=%d N5=%d H=%d rejected=%d", n, r.total, r.c4, r.n4, r.c5, r.n5, r.h, r.rejected)
    return counters


def emit_table_row(counters: PipelineCounters, n: int) -> str:
    """Row ``n C4 N4 C5 N5 H`` in the census table's column order."""
    if n not in counters.rows:
        raise KeyError(f"no counts recorded for n={n}")
    r = counters.rows[n]
    return f"{n} {r.c4} {r.n4} {r.c5} {r.n5} {r.h}"
