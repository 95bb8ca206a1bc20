"""Words, presentations and coset enumeration for rotation triangle groups.

The groups handled here are the orientation-preserving triangle groups

    G+(r,s) = < rho, sigma | rho^r = sigma^s = (rho*sigma)^2 = e >

together with finite quotients obtained by killing additional "translation"
words (adding a word as a relator kills its whole normal closure, which is
exactly the compactification construction).

Generators are encoded as small integers so that words are plain tuples and
the coset table is a dense integer array.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EnumerationOverflow

# Generator symbols.  inv(g) == g ^ 2, an involution.
RHO = 0
SIGMA = 1
RHO_INV = 2
SIGMA_INV = 3

GEN_NAMES = {RHO: "R", SIGMA: "S", RHO_INV: "r", SIGMA_INV: "s"}
NAME_GENS = {v: k for k, v in GEN_NAMES.items()}

Word = tuple  # tuple of generator symbols; () is the identity


def inv_gen(g: int) -> int:
    return g ^ 2


def invert_word(w: Word) -> Word:
    return tuple(inv_gen(g) for g in reversed(w))


def free_reduce(w: Word) -> Word:
    out: list[int] = []
    for g in w:
        if out and out[-1] == inv_gen(g):
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def word_power(w: Word, n: int) -> Word:
    if n < 0:
        return invert_word(w) * (-n)
    return w * n


def parse_word(text: str) -> Word:
    """Parse the textual word syntax.

    Grammar:  word := term+ ; term := atom ("^" signed-int)? ;
              atom := "R" | "S" | "r" | "s" | "(" word ")".
    Uppercase R/S are the generators, lowercase their inverses; whitespace
    is ignored.  Example: "((Sr)^2r)^2".
    """
    pos = 0
    s = "".join(text.split())

    def parse_int() -> int:
        nonlocal pos
        start = pos
        if pos < len(s) and s[pos] in "+-":
            pos += 1
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start or s[start:pos] in ("+", "-"):
            raise ValueError(f"expected integer at position {start} in {text!r}")
        return int(s[start:pos])

    def parse_seq(depth: int) -> Word:
        nonlocal pos
        out: list[int] = []
        while pos < len(s):
            c = s[pos]
            if c == ")":
                if depth == 0:
                    raise ValueError(f"unbalanced ')' in {text!r}")
                break
            if c == "(":
                pos += 1
                atom = parse_seq(depth + 1)
                if pos >= len(s) or s[pos] != ")":
                    raise ValueError(f"unbalanced '(' in {text!r}")
                pos += 1
            elif c in NAME_GENS:
                atom = (NAME_GENS[c],)
                pos += 1
            else:
                raise ValueError(f"unexpected {c!r} in {text!r}")
            if pos < len(s) and s[pos] == "^":
                pos += 1
                atom = word_power(atom, parse_int())
            out.extend(atom)
        return tuple(out)

    word = parse_seq(0)
    if pos != len(s):
        raise ValueError(f"trailing input in {text!r}")
    return free_reduce(word)


def word_to_str(w: Word) -> str:
    return "".join(GEN_NAMES[g] for g in w) or "e"


@dataclass(frozen=True)
class Presentation:
    """Presentation of a quotient of G+(r,s) by extra relators."""

    r: int
    s: int
    extra_relators: tuple = ()

    def __post_init__(self):
        if self.r < 3 or self.s < 3:
            raise ValueError("need r >= 3 and s >= 3")
        extras = tuple(free_reduce(tuple(w)) for w in self.extra_relators)
        if any(not w for w in extras):
            raise ValueError("extra relators must be nonempty after reduction")
        object.__setattr__(self, "extra_relators", extras)

    @property
    def base_relators(self) -> list[Word]:
        return [
            (RHO,) * self.r,
            (SIGMA,) * self.s,
            (RHO, SIGMA, RHO, SIGMA),
        ]

    @property
    def relators(self) -> list[Word]:
        return self.base_relators + list(self.extra_relators)


@dataclass
class CosetTable:
    """Right multiplication action of the generators on a finite quotient.

    ``act[i, g]`` is the element reached from element ``i`` by right
    multiplication with generator ``g``.  Index 0 is the identity and the
    numbering is the breadth-first discovery order from 0 over the
    generators (RHO, SIGMA, RHO_INV, SIGMA_INV), which makes it canonical.
    """

    order: int
    act: np.ndarray
    presentation: Presentation = field(repr=False, default=None)

    def word_action(self, start: int, w: Word) -> int:
        if not 0 <= start < self.order:
            raise IndexError(f"element index {start} out of range")
        e = start
        for g in w:
            e = int(self.act[e, g])
        return e

    def orbits(self, w: Word) -> list[list[int]]:
        """Orbits of right multiplication by ``w`` (left cosets of <w>)."""
        seen = np.zeros(self.order, dtype=bool)
        out = []
        for start in range(self.order):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            e = self.word_action(start, w)
            while e != start:
                orbit.append(e)
                seen[e] = True
                e = self.word_action(e, w)
            out.append(orbit)
        return out


def word_action(table: CosetTable, start: int, w: Word) -> int:
    return table.word_action(start, w)


def enumerate_quotient(p: Presentation, max_cosets: int = 10**6) -> CosetTable:
    """Coset enumeration (HLT style) of the trivial subgroup in ``p``.

    Returns the complete multiplication table of the quotient group.  Raises
    EnumerationOverflow if more than ``max_cosets`` cosets are alive at any
    point; an infinite quotient is indistinguishable from a too-small limit.
    """
    if max_cosets <= 0:
        raise ValueError("max_cosets must be positive")
    relators = [free_reduce(w) for w in p.relators]
    relators = [w for w in relators if w]

    table: list[list[int | None]] = [[None] * 4]
    parent = [0]  # union-find over coset labels
    n_live = 1

    def rep(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(c: int, g: int) -> int:
        nonlocal n_live
        if n_live >= max_cosets:
            raise EnumerationOverflow(
                f"needed more than {max_cosets} cosets for {p}"
            )
        n = len(table)
        table.append([None] * 4)
        parent.append(n)
        table[c][g] = n
        table[n][inv_gen(g)] = c
        n_live += 1
        return n

    def merge(a: int, b: int, queue: list[int]) -> None:
        nonlocal n_live
        a, b = rep(a), rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        parent[b] = a
        n_live -= 1
        queue.append(b)

    def coincidence(a: int, b: int) -> None:
        queue: list[int] = []
        merge(a, b, queue)
        qi = 0
        while qi < len(queue):
            dead = queue[qi]
            qi += 1
            for g in range(4):
                f = table[dead][g]
                if f is None:
                    continue
                table[dead][g] = None
                if table[f][inv_gen(g)] == dead:
                    table[f][inv_gen(g)] = None
                e1, f1 = rep(dead), rep(f)
                # reinstall the edge e1 --g--> f1, merging on conflicts
                if table[e1][g] is not None:
                    merge(table[e1][g], f1, queue)
                elif table[f1][inv_gen(g)] is not None:
                    merge(table[f1][inv_gen(g)], e1, queue)
                else:
                    table[e1][g] = f1
                    table[f1][inv_gen(g)] = e1

    def scan_and_fill(c: int, w: Word) -> None:
        i, j = 0, len(w) - 1
        f = b = c
        while True:
            while i <= j and table[f][w[i]] is not None:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][inv_gen(w[j])] is not None:
                b = table[b][inv_gen(w[j])]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][inv_gen(w[i])] = f
                return
            define(f, w[i])

    c = 0
    while c < len(table):
        if rep(c) != c:
            c += 1
            continue
        for w in relators:
            if rep(c) != c:
                break
            scan_and_fill(c, w)
        if rep(c) == c:
            for g in range(4):
                if table[c][g] is None:
                    define(c, g)
        c += 1

    # Collapse to live cosets, then renumber canonically by BFS from the
    # identity so the result does not depend on enumeration history.
    live = [c for c in range(len(table)) if rep(c) == c]
    order = len(live)
    number: dict[int, int] = {rep(0): 0}
    bfs = [rep(0)]
    head = 0
    while head < len(bfs):
        cur = bfs[head]
        head += 1
        for g in range(4):
            nxt = table[cur][g]
            if nxt is None:
                raise AssertionError("incomplete table after enumeration")
            nxt = rep(nxt)
            if nxt not in number:
                number[nxt] = len(bfs)
                bfs.append(nxt)
    if len(bfs) != order:
        raise AssertionError("quotient action is not transitive")

    act = np.empty((order, 4), dtype=np.int32)
    for old, new in number.items():
        for g in range(4):
            act[new, g] = number[rep(table[old][g])]
    return CosetTable(order=order, act=act, presentation=p)
