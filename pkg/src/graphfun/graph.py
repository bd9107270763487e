"""Graph values, seeded generators and edge-list I/O.

Vertices are the integers ``0..n-1``.  Adjacency is held as CSR arrays
(``indptr``/``indices``) with every neighbour list sorted; for graphs with at
most :data:`BITSET_THRESHOLD` vertices each row is also available as a Python
``int`` bitmask (bit ``v`` set iff ``v`` is a neighbour), which is what the
exact searches use for set algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

BITSET_THRESHOLD = 4096

# Uniform doubles are taken from the top 53 bits of each raw 64-bit word.
_TO_UNIT = 2.0**-53
_CHUNK = 1 << 22


class GraphFormatError(ValueError):
    """Malformed edge-list text.  ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class HeaderError(GraphFormatError):
    pass


class VertexRangeError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _csr_from_pairs(n: int, us: np.ndarray, vs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Symmetric CSR arrays from an undirected edge list with ``u != v``."""
    src = np.concatenate([us, vs]).astype(np.int64, copy=False)
    dst = np.concatenate([vs, us]).astype(np.int64, copy=False)
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return indptr, dst


def _rows_from_csr(n: int, indptr: np.ndarray, indices: np.ndarray) -> tuple[int, ...]:
    if n == 0:
        return ()
    dense = np.zeros((n, n), dtype=bool)
    src = np.repeat(np.arange(n), np.diff(indptr))
    dense[src, indices] = True
    packed = np.packbits(dense, axis=1, bitorder="little")
    return tuple(int.from_bytes(r.tobytes(), "little") for r in packed)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph on ``range(n)``."""

    n: int
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from ``(u, v)`` pairs; order and orientation are irrelevant.

        Raises ``ValueError`` on self-loops, out-of-range endpoints or
        duplicate edges.
        """
        arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if arr.size:
            if arr.min() < 0 or arr.max() >= n:
                raise ValueError("edge endpoint out of range")
            if np.any(arr[:, 0] == arr[:, 1]):
                raise ValueError("self-loop")
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        if len(np.unique(lo * max(n, 1) + hi)) != len(lo):
            raise ValueError("duplicate edge")
        return cls._from_pairs(n, lo, hi)

    @classmethod
    def _from_pairs(cls, n: int, us: np.ndarray, vs: np.ndarray) -> "Graph":
        indptr, indices = _csr_from_pairs(n, us, vs)
        return cls(n, _readonly(indptr), _readonly(indices))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build from bitmask rows (must already be symmetric and loop-free)."""
        n = len(masks)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1]
        return cls.from_edges(n, edges)

    def neighbours(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    @cached_property
    def degree_array(self) -> np.ndarray:
        return _readonly(np.diff(self.indptr))

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(x) for x in self.neighbours(v)) for v in range(self.n))

    @cached_property
    def bitset_rows(self) -> tuple[int, ...] | None:
        if self.n > BITSET_THRESHOLD:
            return None
        return _rows_from_csr(self.n, self.indptr, self.indices)

    @property
    def masks(self) -> tuple[int, ...]:
        """Bitmask rows; raises for graphs above the bitset threshold."""
        rows = self.bitset_rows
        if rows is None:
            raise ValueError(f"n={self.n} exceeds bitset threshold {BITSET_THRESHOLD}")
        return rows

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbours(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def edges(self) -> np.ndarray:
        """``(m, 2)`` array of edges ``u < v`` in lexicographic order."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degree_array)
        keep = src < self.indices
        return np.stack([src[keep], self.indices[keep]], axis=1)

    def edge_set(self) -> set[tuple[int, int]]:
        return {(int(u), int(v)) for u, v in self.edges()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False)
class BipartiteGraph:
    """Bipartite graph with parts ``A = range(a)`` and ``B = range(b)``.

    Both sides index from zero independently.  ``indptr``/``indices`` give the
    sorted B-neighbours of each A-vertex.
    """

    a: int
    b: int
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)

    @classmethod
    def from_edges(cls, a: int, b: int, edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if arr.size and (
            arr[:, 0].min() < 0 or arr[:, 0].max() >= a or arr[:, 1].min() < 0 or arr[:, 1].max() >= b
        ):
            raise ValueError("edge endpoint out of range")
        keys = arr[:, 0] * max(b, 1) + arr[:, 1]
        if len(np.unique(keys)) != len(keys):
            raise ValueError("duplicate edge")
        return cls._from_pairs(a, b, arr[:, 0], arr[:, 1])

    @classmethod
    def _from_pairs(cls, a: int, b: int, ia: np.ndarray, jb: np.ndarray) -> "BipartiteGraph":
        order = np.lexsort((jb, ia))
        ia, jb = ia[order].astype(np.int64), jb[order].astype(np.int64)
        indptr = np.zeros(a + 1, dtype=np.int64)
        np.cumsum(np.bincount(ia, minlength=a), out=indptr[1:])
        return cls(a, b, _readonly(indptr), _readonly(jb))

    def neighbours_a(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    @property
    def m(self) -> int:
        return len(self.indices)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(x) for x in self.neighbours_a(i)) for i in range(self.a))

    def edges(self) -> np.ndarray:
        src = np.repeat(np.arange(self.a, dtype=np.int64), np.diff(self.indptr))
        return np.stack([src, self.indices], axis=1)

    @cached_property
    def a_masks(self) -> tuple[int, ...]:
        """For each A-vertex, bitmask over B of its neighbours."""
        out = []
        for i in range(self.a):
            m = 0
            for j in self.neighbours_a(i).tolist():
                m |= 1 << j
            out.append(m)
        return tuple(out)

    @cached_property
    def b_masks(self) -> tuple[int, ...]:
        """For each B-vertex, bitmask over A of its neighbours."""
        if self.a == 0 or self.b == 0:
            return (0,) * self.b
        dense = np.zeros((self.b, self.a), dtype=bool)
        e = self.edges()
        dense[e[:, 1], e[:, 0]] = True
        packed = np.packbits(dense, axis=1, bitorder="little")
        return tuple(int.from_bytes(r.tobytes(), "little") for r in packed)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (
            self.a == other.a
            and self.b == other.b
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"BipartiteGraph(a={self.a}, b={self.b}, m={self.m})"


# --------------------------------------------------------------------------
# Seeded generation.
#
# Pair number r (in lexicographic order) is decided by raw word r of a Philox
# stream keyed by the seed: edge iff top53(word) * 2**-53 < p.  Philox is
# counter-based, so word r only depends on (seed, r) and any chunking or
# parallel split of the pair range gives the same graph.


def _uniform_stream(seed: int, count: int):
    """Yield successive chunks of uniforms in [0, 1) for ``seed``."""
    bg = np.random.Philox(key=int(seed))
    done = 0
    while done < count:
        k = min(_CHUNK, count - done)
        raw = bg.random_raw(k)
        yield (raw >> np.uint64(11)).astype(np.float64) * _TO_UNIT
        done += k


def pair_uniform(seed: int, rank: int) -> float:
    """The uniform that decides pair ``rank`` under ``seed``, computed alone."""
    bg = np.random.Philox(key=int(seed))
    bg.advance(rank // 4)
    word = int(bg.random_raw(4)[rank % 4])
    return (word >> 11) * _TO_UNIT


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Sample G(n, p) deterministically from ``seed``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_p(p)
    total = n * (n - 1) // 2
    us, vs = [], []
    if total and p > 0:
        # Row u owns ranks [start(u), start(u) + n-1-u).
        starts = np.arange(n, dtype=np.int64)
        starts = starts * (2 * n - starts - 1) // 2
        offset = 0
        for chunk in _uniform_stream(seed, total):
            hit = np.flatnonzero(chunk < p) + offset
            u = np.searchsorted(starts, hit, side="right") - 1
            v = hit - starts[u] + u + 1
            us.append(u)
            vs.append(v)
            offset += len(chunk)
    if us:
        return Graph._from_pairs(n, np.concatenate(us), np.concatenate(vs))
    return Graph._from_pairs(n, np.zeros(0, np.int64), np.zeros(0, np.int64))


def gen_bipartite(a: int, b: int, p: float, seed: int) -> BipartiteGraph:
    """Sample G(A, B, p); cross pair ``(i, j)`` has rank ``i*b + j``."""
    if a < 0 or b < 0:
        raise ValueError("part sizes must be non-negative")
    _check_p(p)
    total = a * b
    ia, jb = [np.zeros(0, np.int64)], [np.zeros(0, np.int64)]
    if total and p > 0:
        offset = 0
        for chunk in _uniform_stream(seed, total):
            hit = np.flatnonzero(chunk < p) + offset
            ia.append(hit // b)
            jb.append(hit % b)
            offset += len(chunk)
    return BipartiteGraph._from_pairs(a, b, np.concatenate(ia), np.concatenate(jb))


# --------------------------------------------------------------------------
# Derived graphs and families.


def complement(g: Graph) -> Graph:
    n = g.n
    if n <= BITSET_THRESHOLD:
        full = (1 << n) - 1
        masks = g.masks
        us, vs = [], []
        for u in range(n):
            row = ~masks[u] & full & ~((1 << (u + 1)) - 1)
            while row:
                low = row & -row
                us.append(u)
                vs.append(low.bit_length() - 1)
                row ^= low
        return Graph._from_pairs(n, np.asarray(us, np.int64), np.asarray(vs, np.int64))
    us, vs = [], []
    for u in range(n):
        others = np.arange(u + 1, n)
        keep = ~np.isin(others, g.neighbours(u), assume_unique=True)
        vs.append(others[keep])
        us.append(np.full(int(keep.sum()), u))
    return Graph._from_pairs(n, np.concatenate(us), np.concatenate(vs))


def induced_subgraph(g: Graph, u: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on ``u`` relabelled ``0..|u|-1`` in ascending order.

    Returns the graph and the old-to-new index map.
    """
    verts = sorted(set(int(x) for x in u))
    if verts and (verts[0] < 0 or verts[-1] >= g.n):
        raise ValueError("vertex out of range")
    relabel = np.full(g.n, -1, dtype=np.int64)
    relabel[verts] = np.arange(len(verts))
    e = g.edges()
    if len(e):
        a, b = relabel[e[:, 0]], relabel[e[:, 1]]
        keep = (a >= 0) & (b >= 0)
        a, b = a[keep], b[keep]
    else:
        a = b = np.zeros(0, np.int64)
    return Graph._from_pairs(len(verts), a, b), {v: i for i, v in enumerate(verts)}


def named_family(kind: str, size: int) -> Graph:
    """``path``, ``cycle``, ``complete``, ``star``, ``empty`` on ``size`` vertices,
    or ``hypercube`` of dimension ``size``.

    The star's centre is vertex 0.  Cycles need ``size >= 3`` to have edges
    (smaller sizes give the path).
    """
    if size < 0:
        raise ValueError("size must be non-negative")
    n = size
    if kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "cycle":
        edges = [(i, i + 1) for i in range(n - 1)]
        if n >= 3:
            edges.append((0, n - 1))
    elif kind == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif kind == "star":
        edges = [(0, i) for i in range(1, n)]
    elif kind == "empty":
        edges = []
    elif kind == "hypercube":
        n = 1 << size
        edges = [(v, v | 1 << bit) for v in range(n) for bit in range(size) if not v >> bit & 1]
    else:
        raise ValueError(f"unknown family {kind!r}")
    return Graph.from_edges(n, edges)


# --------------------------------------------------------------------------
# Edge-list text.


def _ints(line: str, count: int, lineno: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise (HeaderError if lineno == 1 else GraphFormatError)(
            f"expected {count} integers for {what}, got {line.strip()!r}", lineno
        )
    try:
        vals = [int(x) for x in parts]
    except ValueError:
        raise (HeaderError if lineno == 1 else GraphFormatError)(
            f"non-integer token in {what}: {line.strip()!r}", lineno
        ) from None
    if lineno == 1 and min(vals) < 0:
        raise HeaderError("negative count in header", lineno)
    return vals


def _body(text: str) -> list[tuple[int, str]]:
    return [(i, ln) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]


def read_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` then ``m`` lines ``"u v"`` with ``0 <= u < v < n``."""
    lines = _body(text)
    if not lines:
        raise HeaderError("missing header", 1)
    hline, header = lines[0]
    if hline != 1:
        raise HeaderError("header must be the first line", 1)
    n, m = _ints(header, 2, 1, "header 'n m'")
    rows = lines[1:]
    if len(rows) != m:
        raise HeaderError(f"header declares {m} edges, found {len(rows)}", 1)
    seen: set[tuple[int, int]] = set()
    for lineno, ln in rows:
        u, v = _ints(ln, 2, lineno, "edge 'u v'")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"vertex out of range 0..{n - 1}: {u} {v}", lineno)
        if u > v:
            raise GraphFormatError(f"edge must be written u < v: {u} {v}", lineno)
        if (u, v) in seen:
            raise DuplicateEdgeError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
    return Graph.from_edges(n, seen)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges().tolist())
    return "\n".join(lines) + "\n"


def read_bipartite(text: str) -> BipartiteGraph:
    """Parse ``"a b m"`` then ``m`` lines ``"i j"`` with ``i < a``, ``j < b``."""
    lines = _body(text)
    if not lines or lines[0][0] != 1:
        raise HeaderError("missing header", 1)
    a, b, m = _ints(lines[0][1], 3, 1, "header 'a b m'")
    rows = lines[1:]
    if len(rows) != m:
        raise HeaderError(f"header declares {m} edges, found {len(rows)}", 1)
    seen: set[tuple[int, int]] = set()
    for lineno, ln in rows:
        i, j = _ints(ln, 2, lineno, "edge 'i j'")
        if not (0 <= i < a and 0 <= j < b):
            raise VertexRangeError(f"vertex out of range: {i} {j}", lineno)
        if (i, j) in seen:
            raise DuplicateEdgeError(f"duplicate edge {i} {j}", lineno)
        seen.add((i, j))
    return BipartiteGraph.from_edges(a, b, seen)


def write_bipartite(bg: BipartiteGraph) -> str:
    lines = [f"{bg.a} {bg.b} {bg.m}"]
    lines.extend(f"{i} {j}" for i, j in bg.edges().tolist())
    return "\n".join(lines) + "\n"
