"""planar_code (plantri's binary format) and a plain-text adjacency format.

planar_code: optional 15-byte header ``>>planar_code<<``, then per graph one
byte ``n`` followed, for every vertex in order, by its clockwise neighbour list
as 1-based bytes terminated by ``0``.  Only the one-byte variant (n <= 255) is
supported.

Text format: a line holding ``n`` followed by ``n`` lines ``v: a b c`` with
0-based labels.  Neighbour order is significant, so a text file can carry a
rotation system.  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from typing import BinaryIO, TextIO

from hypocubic.embedding import NotSphereEmbedding, PlanarEmbedding
from hypocubic.graph import Graph, GraphError, graph_from_adjacency

log = logging.getLogger(__name__)

HEADER = b">>planar_code<<"
MAX_ORDER = 255
_CHUNK = 1 << 16


class PlanarCodeError(ValueError):
    """Malformed planar_code input; ``ordinal`` is 0-based, ``offset`` counts bytes from stream start."""

    def __init__(self, message: str, ordinal: int | None = None, offset: int | None = None):
        where = []
        if ordinal is not None:
            where.append(f"graph #{ordinal}")
        if offset is not None:
            where.append(f"byte offset {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.ordinal = ordinal
        self.offset = offset


class UnsupportedSize(PlanarCodeError):
    pass


class TextFormatError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def iter_planar_code_records(stream: BinaryIO, *, header: bool = True) -> Iterator[tuple[int, bytes]]:
    """Split a planar_code stream into ``(offset, record_bytes)`` pairs without decoding.

    Memory use is bounded by the chunk size plus the largest record.
    """
    buf = bytearray()
    base = 0  # stream offset of buf[0]
    eof = False

    def fill() -> bool:
        nonlocal eof
        if eof:
            return False
        data = stream.read(_CHUNK)
        if not data:
            eof = True
            return False
        buf.extend(data)
        return True

    if header:
        while len(buf) < len(HEADER) and fill():
            pass
        if bytes(buf[: len(HEADER)]) != HEADER:
            raise PlanarCodeError(f"missing {HEADER.decode()} header", offset=0)
        del buf[: len(HEADER)]
        base = len(HEADER)

    ordinal = 0
    pos = 0
    while True:
        if pos >= len(buf):
            del buf[:pos]
            base += pos
            pos = 0
            if not fill():
                return
        n = buf[pos]
        if n == 0:
            raise UnsupportedSize("two-byte planar_code (n >= 256) is not supported", ordinal, base + pos)
        p = pos + 1
        lists_done = 0
        while lists_done < n:
            j = buf.find(0, p)
            if j < 0:
                if not fill():
                    raise PlanarCodeError(
                        f"premature end of stream after {lists_done} of {n} neighbour lists",
                        ordinal,
                        base + len(buf),
                    )
                continue
            p = j + 1
            lists_done += 1
        yield base + pos, bytes(buf[pos:p])
        ordinal += 1
        pos = p
        if pos > _CHUNK:
            del buf[:pos]
            base += pos
            pos = 0


def decode_planar_code_record(
    record: bytes, *, ordinal: int | None = None, offset: int = 0, cubic_only: bool = False
) -> PlanarEmbedding:
    """Decode and fully validate one planar_code record (``n`` byte included)."""
    n = record[0]
    adj: list[tuple[int, ...]] = []
    p = 1
    for v in range(n):
        j = record.index(0, p)
        nbrs = record[p:j]
        for k, b in enumerate(nbrs):
            if b > n:
                raise PlanarCodeError(f"neighbour {b} of vertex {v + 1} exceeds n={n}", ordinal, offset + p + k)
        if len(nbrs) > 3 or (cubic_only and len(nbrs) != 3):
            raise PlanarCodeError(f"vertex {v + 1} has degree {len(nbrs)}", ordinal, offset + p)
        adj.append(tuple(b - 1 for b in nbrs))
        p = j + 1
    try:
        return PlanarEmbedding(graph_from_adjacency(adj))
    except (GraphError, NotSphereEmbedding) as exc:
        raise PlanarCodeError(str(exc), ordinal, offset) from exc


def read_planar_code(
    stream: BinaryIO,
    *,
    header: bool = True,
    cubic_only: bool = False,
    skip_bad: bool = False,
) -> Iterator[PlanarEmbedding]:
    """Lazily decode every graph in a planar_code stream.

    Framing errors always abort.  Validation errors abort unless ``skip_bad``,
    in which case the record is logged and dropped.
    """
    for ordinal, (offset, rec) in enumerate(iter_planar_code_records(stream, header=header)):
        try:
            yield decode_planar_code_record(rec, ordinal=ordinal, offset=offset, cubic_only=cubic_only)
        except PlanarCodeError as exc:
            if not skip_bad:
                raise
            log.warning("skipping bad record: %s", exc)


def encode_planar_code_record(g: Graph | PlanarEmbedding) -> bytes:
    if isinstance(g, PlanarEmbedding):
        g = g.graph
    n = g.vertex_count
    if n > MAX_ORDER or n == 0:
        raise UnsupportedSize(f"cannot encode a graph on {n} vertices in one-byte planar_code")
    out = bytearray([n])
    for nbrs in g.adjacency:
        out.extend(u + 1 for u in nbrs)
        out.append(0)
    return bytes(out)


def write_planar_code(
    embeddings: Iterable[Graph | PlanarEmbedding], stream: BinaryIO, *, header: bool = True
) -> int:
    """Write graphs in planar_code; returns the number of bytes written."""
    written = 0
    if header:
        written += stream.write(HEADER)
    for e in embeddings:
        written += stream.write(encode_planar_code_record(e))
    return written


def read_text_adjacency(source: TextIO | Iterable[str]) -> Iterator[Graph]:
    """Parse the text adjacency format; yields one :class:`Graph` per block."""
    rows: list[tuple[int, ...]] = []
    expected = None
    start_line = 0
    for lineno, raw in enumerate(source, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if expected is None:
            try:
                expected = int(line)
            except ValueError:
                raise TextFormatError(f"expected a vertex count, got {line!r}", lineno) from None
            if expected < 0:
                raise TextFormatError("negative vertex count", lineno)
            start_line = lineno
        else:
            label, sep, rest = line.partition(":")
            if not sep:
                raise TextFormatError(f"expected 'v: neighbours', got {line!r}", lineno)
            try:
                v = int(label)
                nbrs = tuple(int(t) for t in rest.split())
            except ValueError:
                raise TextFormatError(f"non-integer token in {line!r}", lineno) from None
            if v != len(rows):
                raise TextFormatError(f"expected vertex {len(rows)}, got {v}", lineno)
            for u in nbrs:
                if not 0 <= u < expected:
                    raise TextFormatError(f"neighbour {u} out of range 0..{expected - 1}", lineno)
            rows.append(nbrs)
        if expected is not None and len(rows) == expected:
            try:
                yield graph_from_adjacency(rows)
            except GraphError as exc:
                raise TextFormatError(str(exc), start_line) from exc
            rows, expected = [], None
    if expected is not None:
        raise TextFormatError(f"graph truncated: {len(rows)} of {expected} vertex lines", start_line)


def format_text_adjacency(g: Graph | PlanarEmbedding) -> str:
    if isinstance(g, PlanarEmbedding):
        g = g.graph
    lines = [str(g.vertex_count)]
    for v, nbrs in enumerate(g.adjacency):
        lines.append(f"{v}: {' '.join(map(str, nbrs))}".rstrip())
    return "\n".join(lines) + "\n"


def write_text_adjacency(graphs: Iterable[Graph | PlanarEmbedding], stream: TextIO) -> None:
    """Write graphs in text format, separated by blank lines."""
    for i, g in enumerate(graphs):
        if i:
            stream.write("\n")
        stream.write(format_text_adjacency(g))
