"""Finite groups, ramification data, Hopf quivers and the path coalgebra.

General quivers carry explicit arrow lists and only feed
:func:`hopf_quiver` / :func:`is_connected`.  Everything downstream of
the classification lives on the basic cycle, where a path is just a
(source, length) pair.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from math import comb

from .cyclo import CycloNum

__all__ = [
    "FiniteGroup",
    "RamificationDatum",
    "Quiver",
    "Path",
    "PathVector",
    "hopf_quiver",
    "is_connected",
    "comultiply",
    "counit",
    "thin_splits",
    "parse_path",
]


class FiniteGroup:
    """A finite group given by its Cayley table; element 0 is the unit."""

    def __init__(self, table):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        for row in table:
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise ValueError("Cayley table is not square over 0..n-1")
        if any(table[0][j] != j or table[j][0] != j for j in range(n)):
            raise ValueError("element 0 is not a two-sided unit")
        for i in range(n):
            if sorted(table[i]) != list(range(n)) or sorted(
                table[j][i] for j in range(n)
            ) != list(range(n)):
                raise ValueError("Cayley table rows/columns are not permutations")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if table[table[i][j]][k] != table[i][table[j][k]]:
                        raise ValueError("Cayley table is not associative")
        self.table = table
        self.order = n

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(0)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls([[(i + j) % n for j in range(n)] for i in range(n)])

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        # ensure identity is element 0
        assert index[tuple(range(n))] == 0
        table = [
            [index[tuple(p[q[k]] for k in range(n))] for q in perms] for p in perms
        ]
        return cls(table)

    @cached_property
    def conjugacy_classes(self) -> tuple[frozenset, ...]:
        seen = set()
        classes = []
        for x in range(self.order):
            if x in seen:
                continue
            orbit = {self.mul(self.mul(g, x), self.inv(g)) for g in range(self.order)}
            seen |= orbit
            classes.append(frozenset(orbit))
        return tuple(classes)

    def generated_subgroup(self, gens) -> frozenset:
        sub = {0}
        frontier = set(gens)
        while frontier:
            sub |= frontier
            frontier = {
                self.mul(a, b) for a in sub for b in sub
            } - sub
        return frozenset(sub)


class RamificationDatum:
    """Non-negative integer coefficients on the conjugacy classes of a group."""

    def __init__(self, group: FiniteGroup, coefficients: dict):
        classes = set(group.conjugacy_classes)
        if set(coefficients) != classes:
            raise ValueError("coefficient keys must be exactly the conjugacy classes")
        if any(v < 0 for v in coefficients.values()):
            raise ValueError("ramification coefficients must be non-negative")
        self.group = group
        self.coefficients = dict(coefficients)

    @classmethod
    def on_class_of(cls, group: FiniteGroup, element: int, mult: int = 1):
        coeffs = {c: 0 for c in group.conjugacy_classes}
        for c in group.conjugacy_classes:
            if element in c:
                coeffs[c] = mult
        return cls(group, coeffs)

    @classmethod
    def zero(cls, group: FiniteGroup):
        return cls(group, {c: 0 for c in group.conjugacy_classes})


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple  # (source, target, multiplicity-index)
    hopf_data: tuple | None = None  # (group, datum) when built by hopf_quiver

    def __post_init__(self):
        vs = set(self.vertices)
        for s, t, _ in self.arrows:
            if s not in vs or t not in vs:
                raise ValueError(f"arrow ({s},{t}) endpoints not in vertex set")


def hopf_quiver(group: FiniteGroup, datum: RamificationDatum) -> Quiver:
    """Q(G, R): for each x in G, each class C and c in C, R_C arrows x -> cx."""
    if datum.group is not group:
        raise ValueError("ramification datum belongs to a different group")
    arrows = []
    for x in range(group.order):
        for cls_, mult in datum.coefficients.items():
            for c in sorted(cls_):
                for k in range(mult):
                    arrows.append((x, group.mul(c, x), k))
    return Quiver(tuple(range(group.order)), tuple(arrows), hopf_data=(group, datum))


def is_connected(q: Quiver) -> bool:
    """Connectivity of the underlying undirected graph.

    For quivers built by :func:`hopf_quiver` the result is cross-checked
    against the group-generation criterion.
    """
    if not q.vertices:
        return True
    adj = {v: set() for v in q.vertices}
    for s, t, _ in q.arrows:
        adj[s].add(t)
        adj[t].add(s)
    seen = {q.vertices[0]}
    stack = [q.vertices[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    graph_connected = len(seen) == len(q.vertices)
    if q.hopf_data is not None:
        group, datum = q.hopf_data
        gens = set()
        for cls_, mult in datum.coefficients.items():
            if mult:
                gens |= cls_
        criterion = group.generated_subgroup(gens) == frozenset(range(group.order))
        if criterion != graph_connected:
            raise AssertionError(
                "graph connectivity disagrees with the generation criterion"
            )
    return graph_connected


# ---------------------------------------------------------------------------
# paths on the basic cycle Z^n
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Path:
    """The path p(i, l) on the basic cycle: source vertex i, length l."""

    cycle: int
    source: int
    length: int

    def __post_init__(self):
        if self.cycle < 1 or self.length < 0:
            raise ValueError("need cycle >= 1 and length >= 0")
        object.__setattr__(self, "source", self.source % self.cycle)

    @property
    def target(self) -> int:
        return (self.source + self.length) % self.cycle

    def is_vertex(self) -> bool:
        return self.length == 0

    def __str__(self):
        return f"p({self.source},{self.length})"


_PATH_RE = re.compile(r"^\s*p\(\s*(-?\d+)\s*,\s*(\d+)\s*\)\s*$")
_VERTEX_RE = re.compile(r"^\s*g\^?(-?\d+)\s*$")
_ARROW_RE = re.compile(r"^\s*X_?(-?\d+)\s*$")


def parse_path(text: str, cycle: int) -> Path:
    """Parse "p(i,l)", "g^i" (= p(i,0)) or "X_i" (= p(i-1,1))."""
    m = _PATH_RE.match(text)
    if m:
        return Path(cycle, int(m.group(1)), int(m.group(2)))
    m = _VERTEX_RE.match(text)
    if m:
        return Path(cycle, int(m.group(1)), 0)
    m = _ARROW_RE.match(text)
    if m:
        return Path(cycle, int(m.group(1)) - 1, 1)
    raise ValueError(f"cannot parse path literal {text!r}")


class PathVector:
    """Finitely supported CycloNum-linear combination of paths."""

    __slots__ = ("cycle", "terms")

    def __init__(self, cycle: int, terms: dict | None = None):
        self.cycle = cycle
        clean = {}
        if terms:
            for p, c in terms.items():
                if p.cycle != cycle:
                    raise ValueError("mixed cycle sizes in PathVector")
                if not c.is_zero():
                    clean[p] = clean[p] + c if p in clean else c
        self.terms = {p: c for p, c in clean.items() if not c.is_zero()}

    @classmethod
    def monomial(cls, p: Path, coeff: CycloNum | None = None) -> "PathVector":
        return cls(p.cycle, {p: coeff if coeff is not None else CycloNum.one()})

    def __add__(self, other: "PathVector") -> "PathVector":
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out[p] + c if p in out else c
        return PathVector(self.cycle, out)

    def __sub__(self, other: "PathVector") -> "PathVector":
        return self + other.scale(CycloNum.from_rational(-1))

    def scale(self, c: CycloNum) -> "PathVector":
        return PathVector(self.cycle, {p: x * c for p, x in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, PathVector):
            return NotImplemented
        if self.cycle != other.cycle:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(c == other.terms[p] for p, c in self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c})*{p}" for p, c in sorted(
                self.terms.items(), key=lambda kv: (kv[0].length, kv[0].source)
            )
        )


def comultiply(p: Path) -> list[tuple[Path, Path]]:
    """Splitting pairs of the path-coalgebra coproduct, unit coefficients."""
    n, i, l = p.cycle, p.source, p.length
    return [(Path(n, i + k, l - k), Path(n, i, k)) for k in range(l + 1)]


def counit(p: Path) -> int:
    return 1 if p.length == 0 else 0


def thin_splits(p: Path, parts: int):
    """All thin splits of p into `parts` slots.

    Returns a list of (d, segments): d is the 0/1 indicator tuple and
    segments the corresponding vertices/arrows, read left to right along
    the path.
    """
    n, i, l = p.cycle, p.source, p.length
    if parts < l:
        raise ValueError(f"need parts >= path length, got {parts} < {l}")
    out = []
    for ones in itertools.combinations(range(parts), l):
        ones_set = set(ones)
        d = tuple(1 if t in ones_set else 0 for t in range(parts))
        segments = []
        k = 0  # arrows consumed so far
        for t in range(parts):
            if d[t]:
                segments.append(Path(n, i + k, 1))
                k += 1
            else:
                segments.append(Path(n, i + k, 0))
        out.append((d, tuple(segments)))
    assert len(out) == comb(parts, l)
    return out
