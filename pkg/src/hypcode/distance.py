"""Code distance: doubled-graph shortest cycles, brute force, and spectra.

The systole (shortest homologically non-trivial cycle) is found by cutting
the 1-skeleton along each cohomology basis element b and pasting in a
second copy: a shortest path from a cut endpoint v to its mirror v' closes
into a cycle crossing b an odd number of times.  The cosystole runs the
same machinery on the dual graph, and the code distance is the minimum of
the two.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .csscode import CssCode
from .errors import BudgetExceeded, NoNontrivialCycle
from .homology import RowSpace
from .tiling import Tiling


def _shortest_crossing_cycle(
    n_nodes: int, edge_ends: list, cut_edges: set
) -> int:
    """Length of the shortest cycle crossing the cut an odd number of times."""
    rows, cols = [], []
    for e, (u, v) in enumerate(edge_ends):
        if e in cut_edges:
            pairs = [(u, v + n_nodes), (u + n_nodes, v)]
        else:
            pairs = [(u, v), (u + n_nodes, v + n_nodes)]
        for a, b in pairs:
            rows += [a, b]
            cols += [b, a]
    g = csr_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)),
        shape=(2 * n_nodes, 2 * n_nodes),
    )
    sources = sorted({edge_ends[e][0] for e in cut_edges})
    dist = dijkstra(g, unweighted=True, indices=sources)
    best = np.inf
    for i, v in enumerate(sources):
        best = min(best, dist[i, v + n_nodes])
    return int(best)


def systole(t: Tiling, code: CssCode) -> int:
    """Shortest non-trivial cycle length of the primal 1-skeleton."""
    if code.k == 0:
        raise NoNontrivialCycle("code encodes no qubits")
    best = np.inf
    for b in code.logical_x:
        cut = set(b.support)
        best = min(
            best, _shortest_crossing_cycle(t.n_vertices, t.edge_vertices, cut)
        )
    return int(best)


def cosystole(t: Tiling, code: CssCode) -> int:
    """Shortest non-trivial cycle length of the dual 1-skeleton."""
    if code.k == 0:
        raise NoNontrivialCycle("code encodes no qubits")
    best = np.inf
    for b in code.logical_z:
        cut = set(b.support)
        best = min(
            best, _shortest_crossing_cycle(t.n_faces, t.edge_faces, cut)
        )
    return int(best)


def code_distance(t: Tiling, code: CssCode) -> int:
    return min(systole(t, code), cosystole(t, code))


def _species_masks(check_mat: np.ndarray, logical_mat: np.ndarray):
    """Per-edge combined (syndrome, logical-parity) bitmasks as Python ints."""
    n = check_mat.shape[1]
    k = logical_mat.shape[0]
    masks = []
    for e in range(n):
        synd = 0
        for row in np.nonzero(check_mat[:, e])[0]:
            synd |= 1 << int(row)
        log = 0
        for j in range(k):
            if logical_mat[j, e]:
                log |= 1 << j
        masks.append((synd << k) | log)
    return masks, (1 << k) - 1


def _min_weight_logical(masks, log_bits: int, w_max: int):
    n = len(masks)
    for w in range(1, w_max + 1):
        for combo in combinations(masks, w):
            acc = 0
            for m in combo:
                acc ^= m
            if acc and acc <= log_bits:
                # zero syndrome, some logical flipped
                return w
    return None


def brute_force_distance(
    code: CssCode, w_max: int, budget: int = 50_000_000, species: str = "both"
) -> int | None:
    """Exact distance by exhaustive chain enumeration up to weight w_max.

    Independent of the doubled-graph route: every chain of weight 1..w_max
    is tested for being a non-trivial logical; species "Z", "X", or "both".
    Returns None when no logical of weight <= w_max exists.
    """
    runs = {
        "Z": [(code.h_x.a, code.logical_x_matrix)],
        "X": [(code.h_z.a, code.logical_z_matrix)],
    }
    runs["both"] = runs["Z"] + runs["X"]
    work = sum(comb(code.n, w) * w for w in range(1, w_max + 1))
    if len(runs[species]) * work > budget:
        raise BudgetExceeded(f"{len(runs[species]) * work} > budget {budget}")
    best = None
    for check, logical in runs[species]:
        masks, log_bits = _species_masks(check, logical)
        limit = w_max if best is None else best - 1
        found = _min_weight_logical(masks, log_bits, limit)
        if found is not None:
            best = found if best is None else min(best, found)
    return best


def _simple_cycles_up_to(adj: list, edge_ids: dict, max_len: int):
    """All simple cycles of length 3..max_len (and doubled edges of length 2
    are impossible here), as sorted edge-id tuples, one per cycle."""
    cycles = set()
    n = len(adj)
    for base in range(n):
        # paths base -> ... -> cur with interior vertices > base
        stack = [(base, [base])]
        while stack:
            cur, path = stack.pop()
            for nxt in adj[cur]:
                if nxt == base and len(path) >= 3:
                    # close; canonical direction: second vertex < last
                    if path[1] < path[-1]:
                        edges = tuple(
                            sorted(
                                edge_ids[(min(a, b), max(a, b))]
                                for a, b in zip(path, path[1:] + [base])
                            )
                        )
                        cycles.add(edges)
                elif nxt > base and nxt not in path and len(path) < max_len:
                    stack.append((nxt, path + [nxt]))
    return cycles


def _greedy_basis(
    n_nodes: int, edge_ends: list, n_edges: int, boundary_rows: np.ndarray, k: int
):
    adj = [[] for _ in range(n_nodes)]
    edge_ids = {}
    for e, (u, v) in enumerate(edge_ends):
        adj[u].append(v)
        adj[v].append(u)
        edge_ids[(min(u, v), max(u, v))] = e
    for lst in adj:
        lst.sort()

    w = 3
    while True:
        cycles = sorted(
            _simple_cycles_up_to(adj, edge_ids, w), key=lambda c: (len(c), c)
        )
        space = RowSpace(n_edges)
        for row in boundary_rows:
            space.add(row)
        chosen = []
        for edges in cycles:
            v = np.zeros(n_edges, dtype=np.uint8)
            v[list(edges)] = 1
            if space.add(v):
                chosen.append(edges)
                if len(chosen) == k:
                    return chosen
        if w > n_edges:
            raise AssertionError("failed to complete a logical basis")
        w += 1


def _both_bases(t: Tiling, code: CssCode) -> dict:
    if code.k == 0:
        raise NoNontrivialCycle("code encodes no qubits")
    return {
        "Z": _greedy_basis(
            t.n_vertices, t.edge_vertices, t.n_edges, code.h_z.a, code.k
        ),
        "X": _greedy_basis(
            t.n_faces, t.edge_faces, t.n_edges, code.h_x.a, code.k
        ),
    }


def logical_weight_spectrum(t: Tiling, code: CssCode) -> dict:
    """Weights of a greedily weight-minimized logical basis, per species.

    Each species' basis is built by repeatedly taking the lightest simple
    cycle that is independent, modulo boundaries, of the cycles already
    chosen; ties are broken by lexicographic edge order.  Returns
    {"Z": [(weight, count), ...], "X": [...]}.
    """
    bases = _both_bases(t, code)
    out = {}
    for species, chosen in bases.items():
        weights = {}
        for edges in chosen:
            weights[len(edges)] = weights.get(len(edges), 0) + 1
        out[species] = sorted(weights.items())
    return out


def minimum_weight_logicals(t: Tiling, code: CssCode) -> dict:
    """One minimum-weight logical per species, as edge-index tuples."""
    bases = _both_bases(t, code)
    return {sp: chosen[0] for sp, chosen in bases.items()}
