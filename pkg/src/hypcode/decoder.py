"""Syndrome extraction and minimum-weight perfect matching correction.

Z errors flip X-checks (vertices of the primal 1-skeleton) and are matched
on that graph; X errors run the identical machinery on the check graph of
h_z, which for a tiling is the dual 1-skeleton.  Matching is exact blossom,
picking the fastest available backend: a compiled Van Rantwijk cdylib, a
Boost.Graph extension, or pure-python networkx.
"""

from __future__ import annotations

import ctypes
import glob
import os
from dataclasses import dataclass

import numpy as np

from .csscode import CssCode
from .errors import OddSyndrome, OpenSyndrome

try:
    from . import _blossom
except ImportError:  # extension not compiled; pure-python fallback below
    _blossom = None


def _load_matcher():
    here = os.path.dirname(__file__)
    hits = glob.glob(os.path.join(here, "_matcher*.so"))
    if not hits:
        return None
    lib = ctypes.CDLL(hits[0])
    fn = lib.mwpm_solve
    fn.restype = ctypes.c_int32
    fn.argtypes = [
        ctypes.c_size_t,
        ctypes.c_size_t,
        np.ctypeslib.ndpointer(np.uint32, flags="C_CONTIGUOUS"),
        np.ctypeslib.ndpointer(np.uint32, flags="C_CONTIGUOUS"),
        np.ctypeslib.ndpointer(np.int32, flags="C_CONTIGUOUS"),
        np.ctypeslib.ndpointer(np.int64, flags="C_CONTIGUOUS"),
    ]
    return fn


_matcher = _load_matcher()


@dataclass(frozen=True)
class ErrorChain:
    support: frozenset
    species: str  # "X" or "Z"

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(int(i) for i in self.support))

    def __xor__(self, other: "ErrorChain") -> "ErrorChain":
        assert self.species == other.species
        return ErrorChain(self.support ^ other.support, self.species)

    def weight(self) -> int:
        return len(self.support)


@dataclass(frozen=True)
class Syndrome:
    support: frozenset  # flipped check indices
    species: str  # species of the underlying error

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(int(i) for i in self.support))


@dataclass
class MatchingProblem:
    """Complete weighted graph on syndrome vertices."""

    nodes: list
    weights: np.ndarray  # len(nodes) x len(nodes), symmetric, positive


def mwpm(p: MatchingProblem) -> list:
    """Exact minimum-weight perfect matching; returns node pairs."""
    m = len(p.nodes)
    if m % 2:
        raise OddSyndrome(f"{m} defects cannot be paired")
    if m == 0:
        return []
    w = np.asarray(p.weights, dtype=np.int64)
    iu, ju = np.triu_indices(m, k=1)
    # maximize (BIG - w): any perfect matching then beats any deficient one,
    # and among perfect matchings the total weight is minimized
    big = int(w.max()) * m + 1
    if _matcher is not None and big * m < 2**31:
        mate = np.empty(m, dtype=np.int64)
        rc = _matcher(
            m,
            len(iu),
            iu.astype(np.uint32),
            ju.astype(np.uint32),
            (big - w[iu, ju]).astype(np.int32),
            mate,
        )
        if rc != 0:
            raise RuntimeError(f"matcher backend rejected input (rc={rc})")
        pairs = [(a, int(mate[a])) for a in range(m) if 0 <= a < mate[a]]
    elif _blossom is not None:
        pairs = _blossom.max_weight_matching(
            m, iu.astype(np.int64), ju.astype(np.int64), big - w[iu, ju]
        )
    else:
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(m))
        for a, b in zip(iu.tolist(), ju.tolist()):
            g.add_edge(a, b, weight=big - int(w[a, b]))
        pairs = nx.max_weight_matching(g, maxcardinality=True)
    return [(p.nodes[a], p.nodes[b]) for a, b in pairs]


class _Lattice:
    """Check graph of one species: checks are nodes, qubits are edges."""

    def __init__(self, check_mat: np.ndarray, opposite_logicals: np.ndarray):
        self.check = np.ascontiguousarray(check_mat, dtype=np.uint8)
        self.n_checks, self.n_qubits = self.check.shape
        self.endpoints = []
        for e in range(self.n_qubits):
            ends = np.nonzero(self.check[:, e])[0]
            if len(ends) != 2:
                raise ValueError("check graph requires weight-2 qubit columns")
            self.endpoints.append((int(ends[0]), int(ends[1])))
        self.adj = [[] for _ in range(self.n_checks)]
        for e, (u, v) in enumerate(self.endpoints):
            self.adj[u].append((v, e))
            self.adj[v].append((u, e))
        for lst in self.adj:
            lst.sort()
        self.k = opposite_logicals.shape[0]
        # per-qubit bitmask over the opposite-species logical basis
        self.logmask = [0] * self.n_qubits
        for j in range(self.k):
            for e in np.nonzero(opposite_logicals[j])[0]:
                self.logmask[int(e)] |= 1 << j
        self._dist = None
        self._parity = None

    def bfs(self, source: int):
        """Distances and entering-edge table; ties go to the lowest
        neighbor index, so paths are reproducible."""
        dist = np.full(self.n_checks, -1, dtype=np.int32)
        via = np.full(self.n_checks, -1, dtype=np.int32)
        dist[source] = 0
        frontier = [source]
        while frontier:
            nxt = []
            for u in frontier:
                for v, e in self.adj[u]:
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        via[v] = e
                        nxt.append(v)
            frontier = nxt
        return dist, via

    def path_edges(self, via: np.ndarray, source: int, target: int) -> set:
        edges = set()
        v = target
        while v != source:
            e = int(via[v])
            edges.add(e)
            u, w = self.endpoints[e]
            v = u if v == w else w
        return edges

    def precompute(self):
        """All-pairs distances plus path/logical parity table for the
        Monte Carlo hot loop."""
        if self._dist is not None:
            return
        c = self.n_checks
        self._dist = np.empty((c, c), dtype=np.int32)
        self._parity = [[0] * c for _ in range(c)]
        for u in range(c):
            dist, via = self.bfs(u)
            self._dist[u] = dist
            row = self._parity[u]
            for v in np.argsort(dist, kind="stable")[1:]:
                v = int(v)
                e = int(via[v])
                a, b = self.endpoints[e]
                row[v] = row[a if v == b else b] ^ self.logmask[e]

    def defects(self, err_vec: np.ndarray) -> list:
        return np.nonzero((self.check @ err_vec) & 1)[0].tolist()

    def error_parity(self, err_vec: np.ndarray) -> int:
        acc = 0
        for e in np.nonzero(err_vec)[0]:
            acc ^= self.logmask[int(e)]
        return acc

    def decode_parity(self, err_vec: np.ndarray) -> int:
        """Bitmask of logicals flipped by error + matching correction."""
        self.precompute()
        defects = self.defects(err_vec)
        acc = self.error_parity(err_vec)
        if not defects:
            return acc
        w = self._dist[np.ix_(defects, defects)]
        for a, b in mwpm(MatchingProblem(list(range(len(defects))), w)):
            acc ^= self._parity[defects[a]][defects[b]]
        return acc

    def match_correction(self, defect_list: list) -> set:
        """Correction edge set from lazy per-defect BFS (no precompute)."""
        if not defect_list:
            return set()
        if len(defect_list) % 2:
            raise OddSyndrome(f"{len(defect_list)} defects cannot be paired")
        runs = {u: self.bfs(u) for u in defect_list}
        m = len(defect_list)
        w = np.empty((m, m), dtype=np.int64)
        for i, u in enumerate(defect_list):
            w[i] = runs[u][0][defect_list]
        edges = set()
        for a, b in mwpm(MatchingProblem(list(range(m)), w)):
            u, v = defect_list[a], defect_list[b]
            edges ^= self.path_edges(runs[u][1], u, v)
        return edges


def _lattice_for(code: CssCode, species: str) -> _Lattice:
    if species == "Z":
        return _Lattice(code.h_x.a, code.logical_x_matrix)
    return _Lattice(code.h_z.a, code.logical_z_matrix)


class Decoder:
    """Both-species decoder with precomputed distance and parity tables.

    Cheap to clone per worker: tables are read-only after precompute().
    """

    def __init__(self, code: CssCode):
        self.code = code
        self.lattice = {
            "Z": _lattice_for(code, "Z"),
            "X": _lattice_for(code, "X"),
        }

    def precompute(self):
        self.lattice["Z"].precompute()
        self.lattice["X"].precompute()
        return self

    def failure_mask(self, err_vec: np.ndarray, species: str) -> int:
        return self.lattice[species].decode_parity(err_vec)


def syndrome_of(code: CssCode, e: ErrorChain) -> Syndrome:
    check = code.h_x.a if e.species == "Z" else code.h_z.a
    vec = np.zeros(code.n, dtype=np.uint8)
    vec[sorted(e.support)] = 1
    return Syndrome(frozenset(np.nonzero((check @ vec) & 1)[0].tolist()), e.species)


def correct(code: CssCode, s: Syndrome) -> ErrorChain:
    """Lowest-weight chain consistent with the syndrome: minimum-weight
    perfect matching of defects, corrected along shortest paths."""
    lat = _lattice_for(code, s.species)
    return ErrorChain(frozenset(lat.match_correction(sorted(s.support))), s.species)


def is_success(code: CssCode, e: ErrorChain, r: ErrorChain) -> bool:
    """True iff the residual e + r is a boundary (no logical error)."""
    residual = e ^ r
    if syndrome_of(code, residual).support:
        raise OpenSyndrome("residual error has non-empty syndrome")
    lat = _lattice_for(code, residual.species)
    vec = np.zeros(code.n, dtype=np.uint8)
    vec[sorted(residual.support)] = 1
    return lat.error_parity(vec) == 0
