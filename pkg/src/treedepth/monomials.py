"""Monomial ideal kernel: edge ideals, powers, colons, restrictions,
polarization and the lcm lattice.

Monomials carry dense exponent tuples over an ordered ``VariableSet``; an
ideal is represented by its unique minimal (divisibility-reduced) generating
set, kept in a canonical sort so ideal equality is plain tuple equality.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import (AmbientMismatchError, ParameterError, ResourceCapError,
                     UnknownVariableError)
from .graphs import Graph

DEFAULT_LATTICE_CAP = 200_000


def _env_cap(default: int) -> int:
    raw = os.environ.get("TREEDEPTH_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ParameterError(f"TREEDEPTH_CAP must be an integer, got {raw!r}")
    return default


class VariableSet:
    """An ordered, immutable list of variable names."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ParameterError("duplicate variable names")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, *a):
        raise AttributeError("VariableSet is immutable")

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, VariableSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VariableSet({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None


class Monomial:
    """A monomial x^a as a dense exponent tuple over a VariableSet."""

    __slots__ = ("ambient", "exponents")

    def __init__(self, ambient: VariableSet, exponents):
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != len(ambient):
            raise ParameterError("exponent vector length does not match ambient")
        if any(e < 0 for e in exponents):
            raise ParameterError("negative exponent")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "exponents", exponents)

    def __setattr__(self, *a):
        raise AttributeError("Monomial is immutable")

    @staticmethod
    def one(ambient: VariableSet) -> "Monomial":
        return Monomial(ambient, (0,) * len(ambient))

    @staticmethod
    def variable(ambient: VariableSet, name: str) -> "Monomial":
        i = ambient.index(name)
        return Monomial(ambient, tuple(1 if j == i else 0 for j in range(len(ambient))))

    @staticmethod
    def from_dict(ambient: VariableSet, sparse: dict) -> "Monomial":
        exps = [0] * len(ambient)
        for name, e in sparse.items():
            exps[ambient.index(name)] = int(e)
        return Monomial(ambient, exps)

    def to_dict(self) -> dict:
        return {self.ambient.names[i]: e
                for i, e in enumerate(self.exponents) if e}

    def degree(self) -> int:
        return sum(self.exponents)

    def support(self) -> tuple[str, ...]:
        return tuple(self.ambient.names[i] for i, e in enumerate(self.exponents) if e)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def times(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.ambient,
                        tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.ambient,
                        tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.ambient,
                        tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def exact_divide(self, other: "Monomial") -> "Monomial":
        """self / other; other must divide self."""
        if not other.divides(self):
            raise ParameterError("inexact monomial division")
        return Monomial(self.ambient,
                        tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def _check(self, other: "Monomial"):
        if self.ambient != other.ambient:
            raise AmbientMismatchError("monomials live in different variable sets")

    def sort_key(self):
        return (self.degree(), self.exponents)

    def __eq__(self, other):
        return (isinstance(other, Monomial)
                and self.ambient == other.ambient
                and self.exponents == other.exponents)

    def __hash__(self):
        return hash((self.ambient, self.exponents))

    def __lt__(self, other):
        self._check(other)
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        if self.is_one():
            return "1"
        parts = []
        for name, e in zip(self.ambient.names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


class MonomialIdeal:
    """A monomial ideal held by its minimal generating set.

    Construct through :func:`minimalize` (or the ideal operations below),
    which guarantee minimality and canonical generator order.  The zero
    ideal has an empty generator tuple.  ``power_tag`` optionally records
    (base ideal, t) provenance for ideals produced by :func:`ideal_power`.
    """

    __slots__ = ("ambient", "gens", "power_tag")

    def __init__(self, ambient: VariableSet, gens, power_tag=None):
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "gens", tuple(gens))
        object.__setattr__(self, "power_tag", power_tag)

    def __setattr__(self, *a):
        raise AttributeError("MonomialIdeal is immutable")

    def is_zero(self) -> bool:
        return not self.gens

    def is_proper(self) -> bool:
        return not any(g.is_one() for g in self.gens)

    def num_vars(self) -> int:
        return len(self.ambient)

    def contains(self, m: Monomial) -> bool:
        """Membership: x^a is in the ideal iff some generator divides it."""
        return any(g.divides(m) for g in self.gens)

    def exponent_rows(self) -> list[tuple[int, ...]]:
        return [g.exponents for g in self.gens]

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal)
                and self.ambient == other.ambient
                and self.gens == other.gens)

    def __hash__(self):
        return hash((self.ambient, self.gens))

    def __repr__(self):
        inner = ", ".join(map(repr, self.gens)) if self.gens else "0"
        return f"MonomialIdeal({inner})"

    def to_json(self) -> str:
        obj = {
            "vars": list(self.ambient.names),
            "gens": [g.to_dict() for g in self.gens],
        }
        return json.dumps(obj, indent=None, separators=(",", ":")) + "\n"

    @staticmethod
    def from_json(text: str) -> "MonomialIdeal":
        obj = json.loads(text)
        ambient = VariableSet(obj["vars"])
        gens = [Monomial.from_dict(ambient, d) for d in obj["gens"]]
        return minimalize(gens, ambient=ambient)


def minimalize(gens, ambient: VariableSet | None = None) -> MonomialIdeal:
    """Divisibility-minimal subset of ``gens`` in canonical order.

    All monomials must share one ambient; ``ambient`` is only needed for an
    empty generator collection (the zero ideal).
    """
    gens = list(gens)
    if not gens:
        if ambient is None:
            raise ParameterError("empty generator set needs an explicit ambient")
        return MonomialIdeal(ambient, ())
    amb = gens[0].ambient
    if ambient is not None and ambient != amb:
        raise AmbientMismatchError("generators do not match requested ambient")
    for g in gens[1:]:
        if g.ambient != amb:
            raise AmbientMismatchError("generators live in different variable sets")
    gens = sorted(set(gens))
    kept: list[Monomial] = []
    for g in gens:
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return MonomialIdeal(amb, kept)


def edge_ideal(g: Graph) -> MonomialIdeal:
    """The ideal generated by x_i*x_j over the edges of g, with the graph's
    vertex order as the variable order."""
    ambient = VariableSet(g.vertices)
    gens = []
    for a, b in g.sorted_edges():
        exps = [0] * len(ambient)
        exps[ambient.index(a)] += 1
        exps[ambient.index(b)] += 1
        gens.append(Monomial(ambient, exps))
    return minimalize(gens, ambient=ambient)


def ideal_power(ideal: MonomialIdeal, t: int) -> MonomialIdeal:
    """Minimal generating set of the t-th power.

    Degree-t multiset products are enumerated with divisibility pruning: a
    product is dropped as soon as an already-kept product divides it.
    """
    if t < 1:
        raise ParameterError(f"power must be >= 1, got {t}")
    if t == 1 or ideal.is_zero():
        return ideal
    n = len(ideal.ambient)
    rows = ideal.exponent_rows()
    kept: list[tuple[int, ...]] = []
    for combo in combinations_with_replacement(rows, t):
        prod = [0] * n
        for row in combo:
            for i, e in enumerate(row):
                prod[i] += e
        prod = tuple(prod)
        if not any(all(x <= y for x, y in zip(k, prod)) for k in kept):
            kept.append(prod)
    result = minimalize([Monomial(ideal.ambient, p) for p in kept])
    return MonomialIdeal(result.ambient, result.gens, power_tag=(ideal, t))


def colon(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """(I : m), generated by g / gcd(g, m) over the generators g."""
    if m.ambient != ideal.ambient:
        raise AmbientMismatchError("colon monomial not in the ideal's ambient")
    if ideal.is_zero():
        return ideal
    return minimalize([g.exact_divide(g.gcd(m)) for g in ideal.gens])


def sum_with_vars(ideal: MonomialIdeal, names) -> MonomialIdeal:
    """Minimal generators of I + (the listed variables)."""
    extra = [Monomial.variable(ideal.ambient, n) for n in names]
    return minimalize(list(ideal.gens) + extra, ambient=ideal.ambient)


def restrict(ideal: MonomialIdeal, name: str) -> MonomialIdeal:
    """The minor obtained by setting one variable to zero: drop every
    generator it divides.  The ambient keeps the variable as a free one."""
    i = ideal.ambient.index(name)
    return minimalize([g for g in ideal.gens if g.exponents[i] == 0],
                      ambient=ideal.ambient)


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, int]:
    """Squarefree polarization.

    Each x^e with e >= 2 becomes x * x~1 * ... * x~(e-1); the extra copies
    are appended after the original variables in (variable, copy) order.
    Returns (polarized ideal, number of added variables); the caller owns
    the depth bookkeeping depth(S/I) = depth(S'/I') - shift.
    """
    if all(g.is_squarefree() for g in ideal.gens):
        return ideal, 0
    n = len(ideal.ambient)
    rows = ideal.exponent_rows()
    maxexp = [max((r[i] for r in rows), default=0) for i in range(n)]
    extra = []
    for i in range(n):
        for copy in range(1, maxexp[i]):
            extra.append((i, copy))
    names = list(ideal.ambient.names) + [
        f"{ideal.ambient.names[i]}~{copy}" for i, copy in extra]
    new_ambient = VariableSet(names)
    copy_index = {pair: n + k for k, pair in enumerate(extra)}
    new_gens = []
    for r in rows:
        exps = [0] * len(new_ambient)
        for i, e in enumerate(r):
            if e >= 1:
                exps[i] = 1
            for copy in range(1, e):
                exps[copy_index[(i, copy)]] = 1
        new_gens.append(Monomial(new_ambient, exps))
    return minimalize(new_gens, ambient=new_ambient), len(extra)


def extend_ambient(ideal: MonomialIdeal, extra_names) -> MonomialIdeal:
    """The same ideal viewed in a larger ring with fresh variables appended."""
    new_ambient = VariableSet(ideal.ambient.names + tuple(extra_names))
    pad = (0,) * len(tuple(extra_names))
    gens = [Monomial(new_ambient, g.exponents + pad) for g in ideal.gens]
    return MonomialIdeal(new_ambient, gens)


def disjoint_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """I + J inside the tensor ring when I and J use disjoint variables."""
    if set(a.ambient.names) & set(b.ambient.names):
        raise ParameterError("disjoint_sum needs disjoint variable names")
    ambient = VariableSet(a.ambient.names + b.ambient.names)
    pad_a = (0,) * len(b.ambient)
    pad_b = (0,) * len(a.ambient)
    gens = [Monomial(ambient, g.exponents + pad_a) for g in a.gens]
    gens += [Monomial(ambient, pad_b + g.exponents) for g in b.gens]
    return minimalize(gens, ambient=ambient)


class LcmLattice:
    """All lcms of nonempty generator subsets, ordered by divisibility.

    ``elements`` is sorted by (degree, exponent vector); the generators are
    the atoms.  Divisibility queries are the order relation.
    """

    __slots__ = ("ambient", "elements", "atoms")

    def __init__(self, ambient, elements, atoms):
        self.ambient = ambient
        self.elements = tuple(elements)
        self.atoms = tuple(atoms)

    def __len__(self):
        return len(self.elements)

    def atoms_below(self, m: Monomial) -> list[Monomial]:
        return [a for a in self.atoms if a.divides(m)]

    def leq(self, a: Monomial, b: Monomial) -> bool:
        return a.divides(b)


def lcm_lattice(ideal: MonomialIdeal, cap: int | None = None) -> LcmLattice:
    """Iterative worklist closure of the generators under pairwise lcm.

    Aborts with a resource error if the element count exceeds the cap
    (default 200000, overridable via TREEDEPTH_CAP).
    """
    if ideal.is_zero():
        raise ParameterError("zero ideal has no lcm lattice")
    cap = _env_cap(DEFAULT_LATTICE_CAP) if cap is None else cap
    gens = [g.exponents for g in ideal.gens]
    elems = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for f in frontier:
            for g in gens:
                m = tuple(max(x, y) for x, y in zip(f, g))
                if m not in elems:
                    new.add(m)
        elems |= new
        if len(elems) > cap:
            raise ResourceCapError(
                f"lcm lattice exceeded cap ({len(elems)} > {cap})")
        frontier = new
    amb = ideal.ambient
    monos = sorted(Monomial(amb, e) for e in elems)
    return LcmLattice(amb, monos, ideal.gens)
