"""CSS stabilizer codes assembled from tilings (or raw check matrices).

Qubits sit on edges; Z-checks are face boundaries and X-checks are vertex
coboundaries.  Logical bases are homology/cohomology representatives paired
so that logical_x[i] and logical_z[j] overlap oddly exactly when i == j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .homology import BitMatrix, Chain, RowSpace, boundary1, boundary2, kernel_basis, rank
from .tiling import Tiling, dual


@dataclass
class CssCode:
    n: int
    h_z: BitMatrix  # Z-checks x edges (faces, plus any extra Z checks)
    h_x: BitMatrix  # X-checks x edges (vertices)
    k: int
    logical_z: list
    logical_x: list
    r: int | None = None
    s: int | None = None
    code_id: str | None = None
    _logical_x_mat: np.ndarray = field(repr=False, default=None)
    _logical_z_mat: np.ndarray = field(repr=False, default=None)

    @property
    def logical_x_matrix(self) -> np.ndarray:
        if self._logical_x_mat is None:
            self._logical_x_mat = np.array(
                [c.to_vector(self.n) for c in self.logical_x], dtype=np.uint8
            ).reshape(self.k, self.n)
        return self._logical_x_mat

    @property
    def logical_z_matrix(self) -> np.ndarray:
        if self._logical_z_mat is None:
            self._logical_z_mat = np.array(
                [c.to_vector(self.n) for c in self.logical_z], dtype=np.uint8
            ).reshape(self.k, self.n)
        return self._logical_z_mat

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "s": self.s,
            "code_id": self.code_id,
            "h_x": [sorted(np.nonzero(row)[0].tolist()) for row in self.h_x.a],
            "h_z": [sorted(np.nonzero(row)[0].tolist()) for row in self.h_z.a],
            "logical_x": [sorted(c.support) for c in self.logical_x],
            "logical_z": [sorted(c.support) for c in self.logical_z],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_dict(cls, d: dict) -> "CssCode":
        n = d["n"]

        def mat(rows):
            a = np.zeros((len(rows), n), dtype=np.uint8)
            for i, cols in enumerate(rows):
                a[i, cols] = 1
            return BitMatrix(a)

        return cls(
            n=n,
            h_z=mat(d["h_z"]),
            h_x=mat(d["h_x"]),
            k=d["k"],
            logical_z=[Chain(c) for c in d["logical_z"]],
            logical_x=[Chain(c) for c in d["logical_x"]],
            r=d.get("r"),
            s=d.get("s"),
            code_id=d.get("code_id"),
        )

    @classmethod
    def from_json(cls, text: str) -> "CssCode":
        return cls.from_dict(json.loads(text))


def _gf2_inverse(m: np.ndarray) -> np.ndarray:
    k = m.shape[0]
    aug = np.concatenate([m.copy(), np.eye(k, dtype=np.uint8)], axis=1)
    row = 0
    for col in range(k):
        sub = np.nonzero(aug[row:, col])[0]
        if sub.size == 0:
            raise ValueError("matrix is singular over GF(2)")
        piv = row + int(sub[0])
        if piv != row:
            aug[[row, piv]] = aug[[piv, row]]
        hit = np.nonzero(aug[:, col])[0]
        hit = hit[hit != row]
        aug[hit] ^= aug[row]
        row += 1
    return aug[:, k:]


def _homology_basis(cycle_mat: BitMatrix, boundary_rows: BitMatrix, k: int) -> list:
    """k kernel vectors of cycle_mat independent modulo boundary_rows."""
    space = RowSpace(cycle_mat.cols)
    for row in boundary_rows.a:
        space.add(row)
    reps = []
    for chain in kernel_basis(cycle_mat):
        v = chain.to_vector(cycle_mat.cols)
        if space.add(v):
            reps.append(chain)
            if len(reps) == k:
                break
    if len(reps) != k:
        raise AssertionError("could not extract a full homology basis")
    return reps


def from_checks(
    h_x: BitMatrix,
    h_z: BitMatrix,
    r: int | None = None,
    s: int | None = None,
    code_id: str | None = None,
) -> CssCode:
    """Build a CssCode from raw parity checks, deriving k and logicals."""
    if not isinstance(h_x, BitMatrix):
        h_x = BitMatrix(h_x)
    if not isinstance(h_z, BitMatrix):
        h_z = BitMatrix(h_z)
    if h_x.cols != h_z.cols:
        raise ValueError("check matrices disagree on qubit count")
    n = h_x.cols
    comm = (h_x.a.astype(np.int64) @ h_z.a.T.astype(np.int64)) & 1
    if comm.any():
        raise ValueError("X and Z checks do not commute")

    k = n - rank(h_x) - rank(h_z)
    logical_z = _homology_basis(h_x, h_z, k) if k else []
    logical_x = _homology_basis(h_z, h_x, k) if k else []

    if k:
        zm = np.array([c.to_vector(n) for c in logical_z], dtype=np.uint8)
        xm = np.array([c.to_vector(n) for c in logical_x], dtype=np.uint8)
        overlap = (xm.astype(np.int64) @ zm.T.astype(np.int64)) & 1
        coeff = _gf2_inverse(overlap)
        xm = (coeff.astype(np.int64) @ xm.astype(np.int64)) & 1
        logical_x = [Chain.from_vector(row) for row in xm.astype(np.uint8)]

    return CssCode(
        n=n,
        h_z=h_z,
        h_x=h_x,
        k=k,
        logical_z=logical_z,
        logical_x=logical_x,
        r=r,
        s=s,
        code_id=code_id,
    )


def from_tiling(t: Tiling, code_id: str | None = None) -> CssCode:
    """The homological code of a closed tiled surface."""
    h_z = boundary2(t).transpose()
    h_x = boundary1(t)
    return from_checks(h_x, h_z, r=t.r, s=t.s, code_id=code_id)


@dataclass(frozen=True)
class RateReport:
    k_computed: int
    k_formula: Fraction
    match: bool

    def __str__(self) -> str:
        verdict = "ok" if self.match else "MISMATCH"
        return f"rate-check: {verdict} (k={self.k_computed}, closed-surface formula={self.k_formula})"


def rate_check(code: CssCode, r: int, s: int) -> RateReport:
    """Compare k against the closed {r,s} surface count n(1-2/r-2/s)+2."""
    formula = code.n * (1 - Fraction(2, r) - Fraction(2, s)) + 2
    return RateReport(
        k_computed=code.k,
        k_formula=formula,
        match=formula == code.k,
    )


def code_from_dual(t: Tiling) -> CssCode:
    return from_tiling(dual(t))
