"""GF(2) linear algebra on chain spaces.

Matrices are dense uint8 arrays with all arithmetic mod 2.  Elimination
always picks the lowest-index pivot first, so ranks, kernels and reduced
forms are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tiling import Tiling


@dataclass(frozen=True)
class Chain:
    """A set of cells of one dimension; addition is symmetric difference."""

    support: frozenset

    def __init__(self, support):
        object.__setattr__(self, "support", frozenset(int(i) for i in support))

    def __xor__(self, other: "Chain") -> "Chain":
        return Chain(self.support ^ other.support)

    def __len__(self) -> int:
        return len(self.support)

    def __iter__(self):
        return iter(sorted(self.support))

    def to_vector(self, length: int) -> np.ndarray:
        v = np.zeros(length, dtype=np.uint8)
        v[sorted(self.support)] = 1
        return v

    @classmethod
    def from_vector(cls, v: np.ndarray) -> "Chain":
        return cls(np.nonzero(np.asarray(v) & 1)[0])


class BitMatrix:
    """Dense GF(2) matrix."""

    def __init__(self, a: np.ndarray):
        self.a = (np.asarray(a, dtype=np.uint8) & 1).copy()
        if self.a.ndim != 2:
            raise ValueError("expected a 2-d array")

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(np.eye(n, dtype=np.uint8))

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.a.T)

    def mul_vec(self, v: np.ndarray) -> np.ndarray:
        return (self.a @ (np.asarray(v, dtype=np.uint8) & 1)) & 1

    def mul(self, other: "BitMatrix") -> "BitMatrix":
        return BitMatrix((self.a.astype(np.int64) @ other.a.astype(np.int64)) & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, BitMatrix) and np.array_equal(self.a, other.a)


def _row_reduce(a: np.ndarray):
    """In-place RREF with lowest-index pivots; returns pivot column list."""
    rows, cols = a.shape
    pivots = []
    rank_ = 0
    for col in range(cols):
        sub = np.nonzero(a[rank_:, col])[0]
        if sub.size == 0:
            continue
        piv = rank_ + int(sub[0])
        if piv != rank_:
            a[[rank_, piv]] = a[[piv, rank_]]
        hit = np.nonzero(a[:, col])[0]
        hit = hit[hit != rank_]
        a[hit] ^= a[rank_]
        pivots.append(col)
        rank_ += 1
        if rank_ == rows:
            break
    return pivots


def rank(m: BitMatrix) -> int:
    a = m.a.copy()
    return len(_row_reduce(a))


def kernel_basis(m: BitMatrix) -> list:
    """Basis of {v : m v = 0}, as Chains over the column index set."""
    a = m.a.copy()
    pivots = _row_reduce(a)
    pivot_set = set(pivots)
    basis = []
    for col in range(m.cols):
        if col in pivot_set:
            continue
        v = np.zeros(m.cols, dtype=np.uint8)
        v[col] = 1
        for row, pcol in enumerate(pivots):
            v[pcol] = a[row, col]
        basis.append(Chain.from_vector(v))
    return basis


def in_span(m: BitMatrix, c: Chain) -> bool:
    """True iff c is a GF(2) combination of the columns of m."""
    space = RowSpace(m.rows)
    for col in range(m.cols):
        space.add(m.a[:, col])
    return not space.add(c.to_vector(m.rows), probe=True)


class RowSpace:
    """Incrementally maintained row space in reduced echelon form."""

    def __init__(self, length: int):
        self.length = length
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = (np.asarray(v, dtype=np.uint8) & 1).copy()
        for row, piv in zip(self.rows, self.pivots):
            if v[piv]:
                v ^= row
        return v

    def add(self, v: np.ndarray, probe: bool = False) -> bool:
        """Insert v; returns True iff v was independent of the space.

        With probe=True the space is left unchanged.
        """
        v = self.reduce(v)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        if not probe:
            piv = int(nz[0])
            for row in self.rows:
                if row[piv]:
                    row ^= v
            self.rows.append(v)
            self.pivots.append(piv)
        return True

    def __len__(self) -> int:
        return len(self.rows)


def boundary2(t: Tiling) -> BitMatrix:
    """Face boundary operator as an (edges x faces) matrix."""
    a = np.zeros((t.n_edges, t.n_faces), dtype=np.uint8)
    for f, edges in enumerate(t.face_edges):
        a[edges, f] = 1
    return BitMatrix(a)


def boundary1(t: Tiling) -> BitMatrix:
    """Edge boundary operator as a (vertices x edges) matrix."""
    a = np.zeros((t.n_vertices, t.n_edges), dtype=np.uint8)
    for e, (u, v) in enumerate(t.edge_vertices):
        a[u, e] = 1
        a[v, e] = 1
    return BitMatrix(a)
