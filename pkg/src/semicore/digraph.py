"""Loopless directed graphs with mirrored adjacency, text I/O, and generators.

Vertices are dense integer labels 0..n-1. Both adjacency directions are
stored in CSR form (index pointer + sorted neighbor array) so degree
queries are O(1), neighborhood scans are contiguous, and the compiled
peeling kernels can work on the arrays directly.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DegreeTooLarge,
    DuplicateArc,
    EmptyGraph,
    LoopArc,
    ParseError,
    VertexOutOfRange,
)

INDEX_DTYPE = np.int32


class DiGraph:
    """Immutable digraph. Antiparallel pairs u->w, w->u are allowed;
    loops and duplicate arcs are rejected at construction.

    Do not call the constructor directly; use :func:`build_digraph`,
    :func:`parse_digraph`, one of the generators, or the classmethods.
    """

    __slots__ = ("n", "m", "out_indptr", "out_indices", "in_indptr", "in_indices")

    def __init__(self, n, out_indptr, out_indices, in_indptr, in_indices):
        self.n = int(n)
        self.m = int(out_indices.shape[0])
        self.out_indptr = out_indptr
        self.out_indices = out_indices
        self.in_indptr = in_indptr
        self.in_indices = in_indices
        for arr in (out_indptr, out_indices, in_indptr, in_indices):
            arr.setflags(write=False)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def _from_csr(cls, n, out_indptr, out_indices, in_indptr, in_indices):
        return cls(
            n,
            np.ascontiguousarray(out_indptr, INDEX_DTYPE),
            np.ascontiguousarray(out_indices, INDEX_DTYPE),
            np.ascontiguousarray(in_indptr, INDEX_DTYPE),
            np.ascontiguousarray(in_indices, INDEX_DTYPE),
        )

    @classmethod
    def _from_arc_arrays(cls, n, src, dst):
        """Build from arc arrays already sorted by (src, dst), no validation."""
        out_indptr = _counts_to_indptr(n, src)
        in_indptr, in_indices = _reverse_csr(n, src, dst)
        return cls._from_csr(n, out_indptr, dst, in_indptr, in_indices)

    @classmethod
    def from_adjacency_matrix(cls, mat) -> "DiGraph":
        """Build from a square boolean matrix; mat[u, w] means arc u->w."""
        mat = np.asarray(mat, dtype=bool)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise VertexOutOfRange("adjacency matrix must be square")
        if mat.shape[0] and mat.diagonal().any():
            raise LoopArc("adjacency matrix has a true diagonal entry")
        src, dst = np.nonzero(mat)
        return cls._from_arc_arrays(
            mat.shape[0], src.astype(INDEX_DTYPE), dst.astype(INDEX_DTYPE)
        )

    # -- queries ---------------------------------------------------------------

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")

    def out_neighbors(self, v: int) -> np.ndarray:
        self._check_vertex(v)
        return self.out_indices[self.out_indptr[v] : self.out_indptr[v + 1]]

    def in_neighbors(self, v: int) -> np.ndarray:
        self._check_vertex(v)
        return self.in_indices[self.in_indptr[v] : self.in_indptr[v + 1]]

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.out_indptr[v + 1] - self.out_indptr[v])

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.in_indptr[v + 1] - self.in_indptr[v])

    def out_degrees(self) -> np.ndarray:
        return np.diff(self.out_indptr)

    def in_degrees(self) -> np.ndarray:
        return np.diff(self.in_indptr)

    def min_out_degree(self) -> int:
        if self.n == 0:
            raise EmptyGraph("degree minimum of an empty graph")
        return int(self.out_degrees().min())

    def min_in_degree(self) -> int:
        if self.n == 0:
            raise EmptyGraph("degree minimum of an empty graph")
        return int(self.in_degrees().min())

    def min_semidegree(self) -> int:
        """min over vertices of min(outdegree, indegree)."""
        if self.n == 0:
            raise EmptyGraph("semidegree of an empty graph")
        return int(np.minimum(self.out_degrees(), self.in_degrees()).min())

    def has_arc(self, u: int, w: int) -> bool:
        row = self.out_neighbors(u)
        self._check_vertex(w)
        i = np.searchsorted(row, w)
        return bool(i < row.shape[0] and row[i] == w)

    def arc_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """All arcs as (src, dst) arrays sorted by (src, dst)."""
        src = np.repeat(np.arange(self.n, dtype=INDEX_DTYPE), self.out_degrees())
        return src, self.out_indices

    def arcs(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for w in self.out_neighbors(v):
                yield v, int(w)

    def adjacency_matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=bool)
        src, dst = self.arc_arrays()
        mat[src, dst] = True
        return mat

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiGraph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.out_indptr, other.out_indptr)
            and np.array_equal(self.out_indices, other.out_indices)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"DiGraph(n={self.n}, m={self.m})"


def _counts_to_indptr(n: int, labels: np.ndarray) -> np.ndarray:
    indptr = np.zeros(n + 1, dtype=np.int64)
    if labels.shape[0]:
        np.cumsum(np.bincount(labels, minlength=n), out=indptr[1:])
    return indptr


def _reverse_csr(n: int, src: np.ndarray, dst: np.ndarray):
    """In-adjacency CSR from arcs sorted by (src, dst). Stable sort on dst
    keeps the sources inside each in-list ascending."""
    order = np.argsort(dst, kind="stable")
    return _counts_to_indptr(n, dst), src[order]


# -- public construction -------------------------------------------------------


def build_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> DiGraph:
    """Build a digraph on vertices 0..n-1 from an iterable of (u, w) arcs.

    Raises LoopArc, DuplicateArc, or VertexOutOfRange on bad input and
    EmptyGraph when n < 1.
    """
    if n < 1:
        raise EmptyGraph("a digraph needs at least one vertex")
    seen: set[tuple[int, int]] = set()
    for arc in arcs:
        u, w = int(arc[0]), int(arc[1])
        if not (0 <= u < n and 0 <= w < n):
            raise VertexOutOfRange(f"arc ({u},{w}) outside 0..{n - 1}")
        if u == w:
            raise LoopArc(f"loop arc ({u},{u})")
        if (u, w) in seen:
            raise DuplicateArc(f"arc ({u},{w}) given twice")
        seen.add((u, w))
    if not seen:
        src = np.empty(0, dtype=INDEX_DTYPE)
        return DiGraph._from_arc_arrays(n, src, src.copy())
    pairs = np.array(sorted(seen), dtype=INDEX_DTYPE)
    return DiGraph._from_arc_arrays(n, pairs[:, 0].copy(), pairs[:, 1].copy())


def degrees(g: DiGraph, v: int) -> tuple[int, int]:
    """(outdegree, indegree) of v."""
    return g.out_degree(v), g.in_degree(v)


def induced_subgraph(
    g: DiGraph, vertices: Iterable[int]
) -> tuple[DiGraph, tuple[int, ...]]:
    """Subgraph induced by a vertex set, relabeled to 0..|S|-1 in ascending
    original order. Returns (subgraph, original_labels); original_labels[i]
    is the input-graph label of the subgraph's vertex i. An empty set yields
    the legal 0-vertex graph.
    """
    keep = sorted({int(v) for v in vertices})
    if keep and not (0 <= keep[0] and keep[-1] < g.n):
        bad = keep[0] if keep[0] < 0 else keep[-1]
        raise VertexOutOfRange(f"vertex {bad} outside 0..{g.n - 1}")
    labels = np.asarray(keep, dtype=INDEX_DTYPE)
    k = len(keep)
    if k == 0:
        empty = np.empty(0, dtype=INDEX_DTYPE)
        return DiGraph._from_csr(0, np.zeros(1, INDEX_DTYPE), empty, np.zeros(1, INDEX_DTYPE), empty.copy()), ()
    member = np.zeros(g.n, dtype=bool)
    member[labels] = True
    src, dst = g.arc_arrays()
    sel = member[src] & member[dst]
    new_src = np.searchsorted(labels, src[sel]).astype(INDEX_DTYPE)
    new_dst = np.searchsorted(labels, dst[sel]).astype(INDEX_DTYPE)
    return DiGraph._from_arc_arrays(k, new_src, new_dst), tuple(keep)


# -- edge-list text format ------------------------------------------------------
#
# First meaningful line: "n m". Then exactly m lines "u w" (single space).
# Lines that are blank or start with '#' are ignored anywhere in the file.


def parse_digraph(text: str) -> DiGraph:
    """Parse the edge-list format. Raises ParseError with the 1-based line
    number on any defect, including loops and duplicates."""
    header: tuple[int, int] | None = None
    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    lineno = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected 2 fields, got {len(tokens)}")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {line!r}") from None
        if header is None:
            if a < 1:
                raise ParseError(lineno, f"vertex count must be >= 1, got {a}")
            if b < 0:
                raise ParseError(lineno, f"arc count must be >= 0, got {b}")
            header = (a, b)
            continue
        n, m = header
        if len(arcs) >= m:
            raise ParseError(lineno, f"more than the declared {m} arcs")
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(lineno, f"arc ({a},{b}) outside 0..{n - 1}")
        if a == b:
            raise ParseError(lineno, f"loop arc ({a},{a})")
        if (a, b) in seen:
            raise ParseError(lineno, f"arc ({a},{b}) given twice")
        seen.add((a, b))
        arcs.append((a, b))
    if header is None:
        raise ParseError(1, "missing 'n m' header line")
    if len(arcs) != header[1]:
        raise ParseError(lineno, f"declared {header[1]} arcs but found {len(arcs)}")
    return build_digraph(header[0], arcs)


def serialize_digraph(g: DiGraph) -> str:
    """Edge-list text for g; parse_digraph(serialize_digraph(g)) == g."""
    lines = [f"{g.n} {g.m}"]
    src, dst = g.arc_arrays()
    lines.extend(f"{int(u)} {int(w)}" for u, w in zip(src, dst))
    return "\n".join(lines) + "\n"


# -- generators -----------------------------------------------------------------


def gen_random_min_outdegree(n: int, d: int, seed: int) -> DiGraph:
    """Random digraph where every vertex has outdegree exactly d: each vertex
    independently picks d distinct out-neighbors (never itself) uniformly.
    Deterministic for a fixed (n, d, seed).
    """
    if n < 1:
        raise EmptyGraph("a digraph needs at least one vertex")
    if d < 0:
        raise ValueError("outdegree must be nonnegative")
    if d > n - 1:
        raise DegreeTooLarge(f"outdegree {d} impossible with {n} vertices")
    empty = np.empty(0, dtype=INDEX_DTYPE)
    if d == 0:
        return DiGraph._from_arc_arrays(n, empty, empty.copy())
    rng = np.random.default_rng(seed)
    dst = np.empty(n * d, dtype=INDEX_DTYPE)
    # The d smallest of n-1 iid uniforms index a uniform d-subset. Block the
    # rows so the scratch matrix stays small; the block size is part of the
    # seeded stream layout, so it is fixed.
    block = max(1, (1 << 23) // (n - 1))
    for start in range(0, n, block):
        stop = min(start + block, n)
        draws = rng.random((stop - start, n - 1))
        sel = np.argpartition(draws, d - 1, axis=1)[:, :d]
        sel.sort(axis=1)
        sel = sel + (sel >= np.arange(start, stop)[:, None])  # skip self
        dst[start * d : stop * d] = sel.ravel()
    src = np.repeat(np.arange(n, dtype=INDEX_DTYPE), d)
    return DiGraph._from_arc_arrays(n, src, dst)


def gen_transitive_tournament(n: int) -> DiGraph:
    """Transitive tournament: arc (j, i) for every i < j. Vertex n-1 beats
    everyone (global source); vertex 0 loses to everyone (global sink)."""
    if n < 1:
        raise EmptyGraph("a tournament needs at least one vertex")
    out_indices = np.concatenate(
        [np.arange(j, dtype=INDEX_DTYPE) for j in range(n)]
    ) if n > 1 else np.empty(0, dtype=INDEX_DTYPE)
    out_indptr = np.concatenate(([0], np.cumsum(np.arange(n))))
    in_indices = np.concatenate(
        [np.arange(i + 1, n, dtype=INDEX_DTYPE) for i in range(n)]
    ) if n > 1 else np.empty(0, dtype=INDEX_DTYPE)
    in_indptr = np.concatenate(([0], np.cumsum(np.arange(n - 1, -1, -1))))
    return DiGraph._from_csr(n, out_indptr, out_indices, in_indptr, in_indices)


def gen_complete_bidirected(n: int) -> DiGraph:
    """Both arcs between every vertex pair; every degree is n-1."""
    if n < 1:
        raise EmptyGraph("a digraph needs at least one vertex")
    others = [
        np.delete(np.arange(n, dtype=INDEX_DTYPE), v) for v in range(n)
    ]
    indices = np.concatenate(others) if n > 1 else np.empty(0, dtype=INDEX_DTYPE)
    indptr = np.arange(0, n * n, max(n - 1, 1))[: n + 1]
    if n == 1:
        indptr = np.zeros(2, dtype=INDEX_DTYPE)
    return DiGraph._from_csr(n, indptr, indices, indptr.copy(), indices.copy())
