"""Planar codes from partial {r,s} tilings with rough/smooth boundaries.

A disc-shaped patch of the tiling is grown level by level (reflecting in
boundary edges), its boundary is split into 2k alternating rough/smooth
arcs, and rough arcs are opened up by removing weight-2 X-checks and the
qubits they strand; weight-2 ZZ checks then pin down the retained interior
X-checks of each rough arc.  The result encodes k - 1 logical qubits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import csscode
from .csscode import CssCode
from .errors import RegionTooShort


@dataclass
class PlanarPatch:
    r: int
    s: int
    n_vertices: int
    faces: list  # vertex cycles
    edges: list  # (u, v) pairs, u < v
    boundary_vertices: list  # cyclic order
    boundary_edges: list  # edge ids, boundary_edges[i] joins bv[i], bv[i+1]
    levels: int = 1

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    def face_counts(self) -> list:
        fc = [0] * self.n_vertices
        for f in self.faces:
            for v in f:
                fc[v] += 1
        return fc


class _Builder:
    def __init__(self, r: int, s: int):
        self.r, self.s = r, s
        self.n_vertices = 0
        self.faces = []
        self.edges = []
        self.edge_ids = {}

    def vertex(self) -> int:
        self.n_vertices += 1
        return self.n_vertices - 1

    def edge(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        if key not in self.edge_ids:
            self.edge_ids[key] = len(self.edges)
            self.edges.append(key)
        return self.edge_ids[key]

    def face(self, cycle: list):
        assert len(cycle) == self.r
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            self.edge(a, b)
        self.faces.append(tuple(cycle))


def _seed(b: _Builder, seed_faces: int) -> list:
    """Fan of seed_faces r-gons around a hub vertex (a closed wheel when
    seed_faces == s); returns the boundary cycle."""
    r, s = b.r, b.s
    if not 1 <= seed_faces <= s:
        raise ValueError("seed_faces must be in 1..s")
    if seed_faces == 1:
        cyc = [b.vertex() for _ in range(r)]
        b.face(cyc)
        return cyc
    wheel = seed_faces == s
    hub = b.vertex()
    spokes = [b.vertex() for _ in range(seed_faces if wheel else seed_faces + 1)]
    boundary = []
    for i in range(seed_faces):
        a0 = spokes[i]
        a1 = spokes[(i + 1) % len(spokes)]
        path = [b.vertex() for _ in range(r - 3)]
        b.face([hub, a0] + path + [a1])
        boundary += [a0] + path
    if not wheel:
        boundary = [hub] + boundary + [spokes[-1]]
    return boundary


def _grow_layer(b: _Builder, boundary: list) -> list:
    """Add the next level of r-gons by reflecting in every boundary edge.

    At each boundary vertex the two adjacent new faces stay apart (vertex
    keeps a gap), share a fresh spoke edge (vertex saturates), or merge
    into one face, depending on how many faces the vertex still needs.
    """
    r, s = b.r, b.s
    m = len(boundary)
    fc = [0] * b.n_vertices
    for f in b.faces:
        for v in f:
            fc[v] += 1

    # junction type at boundary[i]: need = faces still missing after the
    # two edge reflections meeting there
    junction = []
    for v in boundary:
        need = s - fc[v] - 2
        if need < -1:
            raise ValueError(f"vertex {v} would be oversaturated")
        junction.append("gap" if need >= 1 else ("spoke" if need == 0 else "merge"))

    # group consecutive boundary edges joined by merge junctions into faces
    starts = [i for i in range(m) if junction[i] != "merge"]
    if not starts:
        raise ValueError("patch cannot grow: boundary fully merges")
    groups = []
    for gi, i in enumerate(starts):
        j = starts[(gi + 1) % len(starts)]
        length = (j - i) % m or m
        groups.append((i, length))  # base path boundary[i..i+length]

    spoke_vert = {
        i: b.vertex() for i in range(m) if junction[i] == "spoke"
    }
    new_boundary = []
    for i, length in groups:
        base = [boundary[(i + t) % m] for t in range(length + 1)]
        left = spoke_vert.get(i)
        right = spoke_vert.get((i + length) % m)
        known = ([left] if left is not None else []) + base + (
            [right] if right is not None else []
        )
        fresh = [b.vertex() for _ in range(r - len(known))]
        if r < len(known):
            raise ValueError("face cannot close: too many forced vertices")
        b.face(known + fresh)
        if junction[i] == "gap":
            new_boundary.append(boundary[i])
        # outer path from the left end of the group to the right
        if left is not None:
            new_boundary.append(left)
        new_boundary += list(reversed(fresh))
    return new_boundary


def grow_patch(r: int, s: int, seed_faces: int = 1, levels: int = 1) -> PlanarPatch:
    if levels < 1:
        raise ValueError("levels must be >= 1")
    b = _Builder(r, s)
    boundary = _seed(b, seed_faces)
    for _ in range(levels - 1):
        boundary = _grow_layer(b, boundary)
    m = len(boundary)
    bedges = [
        b.edge(boundary[i], boundary[(i + 1) % m]) for i in range(m)
    ]
    return PlanarPatch(
        r, s, b.n_vertices, b.faces, b.edges, boundary, bedges, levels
    )


def patch_code(patch: PlanarPatch) -> CssCode:
    """CSS code of the raw patch (always k = 0 on a disc)."""
    n = patch.n_edges
    h_z = np.zeros((patch.n_faces, n), dtype=np.uint8)
    eid = {e: i for i, e in enumerate(patch.edges)}
    for fi, f in enumerate(patch.faces):
        for a, bb in zip(f, f[1:] + f[:1]):
            h_z[fi, eid[(min(a, bb), max(a, bb))]] = 1
    h_x = np.zeros((patch.n_vertices, n), dtype=np.uint8)
    for e, (u, v) in enumerate(patch.edges):
        h_x[u, e] = h_x[v, e] = 1
    return csscode.from_checks(h_x, h_z, r=patch.r, s=patch.s)


def _arcs(n_bound: int, k_regions: int, offset: int) -> list:
    """2*k_regions contiguous arcs of boundary positions, remainder spread
    one edge per arc from the start."""
    n_arcs = 2 * k_regions
    base, rem = divmod(n_bound, n_arcs)
    if base < 2:
        raise RegionTooShort(
            f"{n_bound} boundary edges over {n_arcs} arcs leaves arcs below 2 edges"
        )
    arcs = []
    pos = offset % n_bound
    for i in range(n_arcs):
        size = base + (1 if i < rem else 0)
        arcs.append([(pos + t) % n_bound for t in range(size)])
        pos = (pos + size) % n_bound
    return arcs


def carve_boundaries(
    patch: PlanarPatch, k_regions: int, offset: int = 0, rough_first: bool = True
) -> CssCode:
    """Split the boundary into 2*k_regions alternating rough/smooth arcs and
    open up the rough ones; encodes k_regions - 1 qubits."""
    if k_regions <= 2:
        raise ValueError("k_regions must exceed 2")
    nb = len(patch.boundary_edges)
    if 2 * k_regions > nb:
        raise RegionTooShort(f"{nb} boundary edges cannot host {2*k_regions} arcs")
    arcs = _arcs(nb, k_regions, offset)
    rough_arcs = arcs[0 if rough_first else 1 :: 2]

    degree = [0] * patch.n_vertices
    for u, v in patch.edges:
        degree[u] += 1
        degree[v] += 1
    vert_edges = {}
    for pos, e in enumerate(patch.boundary_edges):
        for v in patch.edges[e]:
            vert_edges.setdefault(v, []).append(pos)

    # drop every weight-2 X-check touching a rough arc (border ones included)
    removed_checks = set()
    for arc in rough_arcs:
        for pos in arc:
            for v in patch.edges[patch.boundary_edges[pos]]:
                if degree[v] == 2:
                    removed_checks.add(v)
    # a qubit with no X-check left sees only its single plaquette: drop it
    removed_qubits = {
        e
        for e, (u, v) in enumerate(patch.edges)
        if u in removed_checks and v in removed_checks
    }

    keep = [e for e in range(patch.n_edges) if e not in removed_qubits]
    col = {e: i for i, e in enumerate(keep)}
    n = len(keep)
    eid = {e: i for i, e in enumerate(patch.edges)}
    z_rows = []
    for f in patch.faces:
        row = np.zeros(n, dtype=np.uint8)
        for a, bb in zip(f, f[1:] + f[:1]):
            e = eid[(min(a, bb), max(a, bb))]
            if e in col:
                row[col[e]] = 1
        z_rows.append(row)
    # ZZ checks at retained X-checks strictly inside a rough arc
    zz_count = 0
    for arc in rough_arcs:
        arc_set = set(arc)
        for v, positions in vert_edges.items():
            if v in removed_checks or degree[v] == 2:
                continue
            if len(positions) == 2 and set(positions) <= arc_set:
                row = np.zeros(n, dtype=np.uint8)
                for pos in positions:
                    row[col[patch.boundary_edges[pos]]] = 1
                z_rows.append(row)
                zz_count += 1
    incident = [[] for _ in range(patch.n_vertices)]
    for e, (u, w) in enumerate(patch.edges):
        if e in col:
            incident[u].append(col[e])
            incident[w].append(col[e])
    x_rows = []
    for v in range(patch.n_vertices):
        if v in removed_checks:
            continue
        row = np.zeros(n, dtype=np.uint8)
        row[incident[v]] = 1
        x_rows.append(row)
    return csscode.from_checks(
        np.array(x_rows, dtype=np.uint8),
        np.array(z_rows, dtype=np.uint8),
        r=patch.r,
        s=patch.s,
        code_id=f"planar-{patch.r}{patch.s}-{n}",
    )


@dataclass(frozen=True)
class PlanarBoundReport:
    n: int
    k: int
    d: int
    ratio: float  # k*d/n


def boundary_bound_report(code: CssCode, d: int) -> PlanarBoundReport:
    """k*d/n for the bound k*d <= c*n on codes with open boundaries."""
    return PlanarBoundReport(code.n, code.k, d, code.k * d / code.n)


def preset_55(k_regions: int = 5, offset: int = 0) -> tuple:
    """The shipped {5,5} example: a 5-pentagon wheel grown one level,
    carved into 10 arcs; targets a [[65, 4, 4]] code."""
    patch = grow_patch(5, 5, seed_faces=5, levels=2)
    return patch, carve_boundaries(patch, k_regions, offset=offset)
