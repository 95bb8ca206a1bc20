"""Tiled quotient surfaces built from coset tables.

Faces, edges and vertices of the quotient surface are the orbits of right
multiplication by rho, rho*sigma and sigma respectively (equivalently, the
left cosets of the cyclic subgroups they generate).  Two cells are incident
exactly when their orbits share an element, so all incidence data is
recovered by a single pass over the element set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateQuotient
from .fpgroup import RHO, SIGMA, CosetTable, Presentation, parse_word


@dataclass
class Tiling:
    """A closed {r,s} surface as three orbit partitions plus incidence."""

    r: int
    s: int
    faces: list
    edges: list
    vertices: list
    face_edges: list
    vertex_edges: list
    edge_faces: list
    edge_vertices: list

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "faces": [list(f) for f in self.faces],
            "edges": [list(e) for e in self.edges],
            "vertices": [list(v) for v in self.vertices],
            "face_edges": [list(x) for x in self.face_edges],
            "vertex_edges": [list(x) for x in self.vertex_edges],
            "edge_faces": [list(x) for x in self.edge_faces],
            "edge_vertices": [list(x) for x in self.edge_vertices],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_dict(cls, d: dict) -> "Tiling":
        return cls(
            r=d["r"],
            s=d["s"],
            faces=[list(f) for f in d["faces"]],
            edges=[list(e) for e in d["edges"]],
            vertices=[list(v) for v in d["vertices"]],
            face_edges=[list(x) for x in d["face_edges"]],
            vertex_edges=[list(x) for x in d["vertex_edges"]],
            edge_faces=[tuple(x) for x in d["edge_faces"]],
            edge_vertices=[tuple(x) for x in d["edge_vertices"]],
        )

    @classmethod
    def from_json(cls, text: str) -> "Tiling":
        return cls.from_dict(json.loads(text))


def build_tiling(t: CosetTable, r: int, s: int) -> Tiling:
    """Assemble the tiling of the quotient surface described by ``t``."""
    faces = t.orbits((RHO,))
    vertices = t.orbits((SIGMA,))
    edges = t.orbits((RHO, SIGMA))

    n_el = t.order
    face_of = np.full(n_el, -1, dtype=np.int64)
    edge_of = np.full(n_el, -1, dtype=np.int64)
    vertex_of = np.full(n_el, -1, dtype=np.int64)
    for i, orbit in enumerate(faces):
        if len(orbit) < r:
            raise DegenerateQuotient(f"face orbit of size {len(orbit)} < {r}")
        face_of[orbit] = i
    for i, orbit in enumerate(vertices):
        if len(orbit) < s:
            raise DegenerateQuotient(f"vertex orbit of size {len(orbit)} < {s}")
        vertex_of[orbit] = i
    for i, orbit in enumerate(edges):
        if len(orbit) < 2:
            raise DegenerateQuotient("edge orbit of size 1")
        edge_of[orbit] = i

    edge_faces = []
    edge_vertices = []
    for orbit in edges:
        f = [int(face_of[el]) for el in orbit]
        v = [int(vertex_of[el]) for el in orbit]
        if f[0] == f[1]:
            raise DegenerateQuotient("edge incident to a single face")
        if v[0] == v[1]:
            raise DegenerateQuotient("edge incident to a single vertex")
        edge_faces.append(tuple(f))
        edge_vertices.append(tuple(v))

    face_edges = [sorted({int(edge_of[el]) for el in orbit}) for orbit in faces]
    vertex_edges = [sorted({int(edge_of[el]) for el in orbit}) for orbit in vertices]
    if any(len(fe) != r for fe in face_edges):
        raise DegenerateQuotient("face incident to fewer than r edges")
    if any(len(ve) != s for ve in vertex_edges):
        raise DegenerateQuotient("vertex incident to fewer than s edges")

    return Tiling(
        r=r,
        s=s,
        faces=faces,
        edges=edges,
        vertices=vertices,
        face_edges=face_edges,
        vertex_edges=vertex_edges,
        edge_faces=edge_faces,
        edge_vertices=edge_vertices,
    )


def dual(t: Tiling) -> Tiling:
    """The dual {s,r} tiling; edges are identified one-to-one."""
    return Tiling(
        r=t.s,
        s=t.r,
        faces=t.vertices,
        edges=t.edges,
        vertices=t.faces,
        face_edges=t.vertex_edges,
        vertex_edges=t.face_edges,
        edge_faces=t.edge_vertices,
        edge_vertices=t.edge_faces,
    )


def build_toric(L: int) -> Tiling:
    """The {4,4} torus with L x L faces and periodic identifications.

    Built combinatorially: the element set is the 4*L*L face corners with
    rho rotating within a face and sigma rotating around the corner vertex,
    then fed through the generic orbit machinery.
    """
    if L < 2:
        raise ValueError("need L >= 2")
    n = 4 * L * L

    def idx(x: int, y: int, c: int) -> int:
        return ((x % L) * L + (y % L)) * 4 + c

    act = np.empty((n, 4), dtype=np.int32)
    for x in range(L):
        for y in range(L):
            for c in range(4):
                e = idx(x, y, c)
                act[e, RHO] = idx(x, y, (c + 1) % 4)
    sigma_moves = {0: (-1, 0, 1), 1: (0, -1, 2), 2: (1, 0, 3), 3: (0, 1, 0)}
    for x in range(L):
        for y in range(L):
            for c in range(4):
                dx, dy, c2 = sigma_moves[c]
                act[idx(x, y, c), SIGMA] = idx(x + dx, y + dy, c2)
    for g in (RHO, SIGMA):
        inverse = np.empty(n, dtype=np.int32)
        inverse[act[:, g]] = np.arange(n, dtype=np.int32)
        act[:, g ^ 2] = inverse

    table = CosetTable(order=n, act=act, presentation=Presentation(4, 4))
    return build_tiling(table, 4, 4)


@dataclass(frozen=True)
class CatalogEntry:
    """One row of the builtin table of compactified lattices."""

    code_id: str
    r: int
    s: int
    words: tuple
    n: int
    k: int
    d: int
    csys: int
    csys_star: int

    def presentation(self) -> Presentation:
        return Presentation(
            self.r, self.s, tuple(parse_word(w) for w in self.words)
        )


_CATALOG = [
    CatalogEntry("54-60", 5, 4, ("((Sr)^2r)^2",), 60, 8, 4, 6, 4),
    CatalogEntry("54-160", 5, 4, ("SR^2(Sr)^2rs^2r^2Sr",), 160, 18, 6, 8, 6),
    CatalogEntry("54-360", 5, 4, ("(SR^2S)^2(rs^2r)^2",), 360, 38, 8, 8, 8),
    CatalogEntry(
        "54-1800", 5, 4,
        ("(Sr)^10", "SR^2S^2rS(R^2s)^2(Rs)^2sr^2Sr"),
        1800, 182, 10, 10, 10,
    ),
    CatalogEntry("54-1920", 5, 4, ("SR^2S^2R(Rs)^4r(rS)^3r",), 1920, 194, 10, 12, 10),
    CatalogEntry("83-48", 8, 3, ("(R^2s)^3",), 48, 4, 3, 6, 3),
    CatalogEntry("83-168", 8, 3, ("(Sr^2)^4",), 168, 14, 4, 8, 4),
    CatalogEntry("83-384", 8, 3, ("(Sr^3)^4",), 384, 32, 4, 12, 4),
    CatalogEntry("83-648", 8, 3, ("SR^4SrSR^2sR^3sr^3Sr",), 648, 54, 6, 14, 6),
    CatalogEntry("83-768", 8, 3, ("SR^2(R^2s)^3R^3sr^3Sr^2",), 768, 64, 6, 16, 6),
]


def catalog() -> list:
    """All builtin compactified-lattice entries, in table order."""
    return list(_CATALOG)


def catalog_entry(code_id: str) -> CatalogEntry:
    for entry in _CATALOG:
        if entry.code_id == code_id:
            return entry
    raise KeyError(f"unknown catalog id {code_id!r}")
