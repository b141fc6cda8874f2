"""Formal spectrum and map expressions with exact homology evaluation.

Expressions are trees over a small alphabet of atoms (sphere, suspension
spectra of circle orbits and cyclic classifying spaces, a shifted stunted
projective space) and constructors (shift, finite wedge, lazy countable
wedge, homotopy orbits, product, fiber).  Countable wedges are indexed
families evaluated degreewise, so a homology query only ever touches the
finitely many summand shapes that can contribute.

Homology rules stay inside the atom alphabet of ``GroupExpr``; a query
whose true answer has no such normal form raises ``EvaluationUnsupported``
instead of approximating.  Infinite products are never evaluated (their
homology has no finite description here), which no table needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abgroups import GradedGroup, GradedMapData, GroupExpr, les_fiber
from .primes import padic_valuation


class EvaluationUnsupported(Exception):
    pass


# ---------------------------------------------------------------------------
# expression alphabet


@dataclass(frozen=True)
class Sphere:
    pass


@dataclass(frozen=True)
class SuspOrbit:
    """Suspension spectrum of the circle modulo its order-n subgroup, with
    disjoint basepoint."""

    n: int


@dataclass(frozen=True)
class BCyc:
    """Suspension spectrum of the classifying space of a cyclic group of
    order m, with disjoint basepoint (m = 1 gives the sphere's homology)."""

    m: int


@dataclass(frozen=True)
class SuspCircle:
    """Suspension spectrum of the circle with disjoint basepoint."""


@dataclass(frozen=True)
class CPInf:
    """Stunted complex projective spectrum with cells from dimension -2:
    one integral class in every even degree >= -2."""


@dataclass(frozen=True)
class CPInfShift:
    """Suspension of the stunted projective spectrum: one integral class in
    every odd degree >= -1 (the shift of the rule above by one)."""


@dataclass(frozen=True)
class Shift:
    k: int
    inner: object


@dataclass(frozen=True)
class Wedge:
    parts: tuple


@dataclass(frozen=True)
class CountableWedge:
    """Lazily indexed countable wedge.  ``family`` is one of
    ("bcyc_ppowers", p), ("orbit_ppowers", p), ("orbits_all",),
    ("bcyc_all",), ("copies", expr)."""

    family: tuple


@dataclass(frozen=True)
class HomOrbit:
    """Homotopy orbits of the inner spectrum under a subgroup of the
    circle: group = ("C", m) or ("S1",)."""

    inner: object
    group: tuple


@dataclass(frozen=True)
class Product:
    parts: tuple


@dataclass(frozen=True)
class CountableProduct:
    """Lazily indexed countable product; symbolic only (its homology has no
    finite normal form in this atom alphabet, so it is never evaluated)."""

    family: tuple


@dataclass(frozen=True)
class FiberExpr:
    map: object


# ---------------------------------------------------------------------------
# map expressions


@dataclass(frozen=True)
class MapIdentity:
    expr: object

    @property
    def domain(self):
        return self.expr

    @property
    def codomain(self):
        return self.expr


@dataclass(frozen=True)
class CircleTransfer:
    """Dimension-shifting transfer of the circle bundle whose fiber
    inclusion multiplies degree-zero homology by p**k.  The sign of the
    degree is pinned to +p**k; only kernels and cokernels feed the tables,
    so the choice is observationally irrelevant."""

    p: int
    k: int

    @property
    def domain(self):
        return BCyc(self.p**self.k)

    @property
    def codomain(self):
        return Shift(-1, SuspCircle())

    def graded_data(self) -> GradedMapData:
        from .abgroups import MapDescriptor
        return GradedMapData.from_dict({0: MapDescriptor.mult(self.p**self.k)})


@dataclass(frozen=True)
class WedgeCircleTransfer:
    """The wedge over k >= 0 of circle transfers out of the classifying
    spaces of the p-power cyclic groups; on degree-zero homology this is
    the row (1, p, p^2, ...)."""

    p: int

    @property
    def domain(self):
        return CountableWedge(("bcyc_ppowers", self.p))

    @property
    def codomain(self):
        return Shift(-1, SuspCircle())

    def graded_data(self) -> GradedMapData:
        from .abgroups import MapDescriptor
        return GradedMapData.from_dict({0: MapDescriptor.row_powers(self.p)})


@dataclass(frozen=True)
class DeltaP:
    """Label map sending the n-th circle-orbit summand to the (p n)-th."""

    p: int
    expr: object

    @property
    def domain(self):
        return self.expr

    @property
    def codomain(self):
        return self.expr


@dataclass(frozen=True)
class DifferenceMap:
    f: object
    g: object

    @property
    def domain(self):
        return self.f.domain

    @property
    def codomain(self):
        return self.f.codomain


@dataclass(frozen=True)
class NamedMap:
    """A purely symbolic map used for displaying squares."""

    name: str
    domain: object
    codomain: object


# ---------------------------------------------------------------------------
# simplification


def simplify(expr):
    """Structural rewrites: drop zero shifts, merge nested shifts, flatten
    wedges, collapse trivial homotopy orbits, and identify circle-orbit
    homotopy orbits under the full circle with cyclic classifying spaces."""
    if isinstance(expr, Shift):
        inner = simplify(expr.inner)
        if isinstance(inner, Shift):
            return simplify(Shift(expr.k + inner.k, inner.inner))
        if expr.k == 0:
            return inner
        return Shift(expr.k, inner)
    if isinstance(expr, Wedge):
        flat = []
        for part in expr.parts:
            part = simplify(part)
            if isinstance(part, Wedge):
                flat.extend(part.parts)
            else:
                flat.append(part)
        if len(flat) == 1:
            return flat[0]
        return Wedge(tuple(flat))
    if isinstance(expr, HomOrbit):
        inner = simplify(expr.inner)
        if expr.group == ("C", 1):
            return inner
        if expr.group == ("S1",):
            if isinstance(inner, SuspOrbit):
                return BCyc(inner.n)
            if isinstance(inner, CountableWedge) and inner.family == ("orbits_all",):
                return CountableWedge(("bcyc_all",))
            if isinstance(inner, CountableWedge) and inner.family[0] == "orbit_ppowers":
                return CountableWedge(("bcyc_ppowers", inner.family[1]))
        return HomOrbit(inner, expr.group)
    if isinstance(expr, Product):
        return Product(tuple(simplify(p) for p in expr.parts))
    return expr


def plocal_reduce(expr, p: int):
    """Replace each cyclic atom by its p-primary cover: an order-n atom
    becomes the order-p^{v_p(n)} one.  Defined on finite expressions over
    the BCyc / SuspOrbit atoms (countable families are split into
    p-power classes upstream)."""
    if isinstance(expr, BCyc):
        return BCyc(p ** padic_valuation(expr.m, p) if expr.m != 0 else 0)
    if isinstance(expr, SuspOrbit):
        return SuspOrbit(p ** padic_valuation(expr.n, p))
    if isinstance(expr, Shift):
        return Shift(expr.k, plocal_reduce(expr.inner, p))
    if isinstance(expr, Wedge):
        return Wedge(tuple(plocal_reduce(e, p) for e in expr.parts))
    if isinstance(expr, (Sphere, SuspCircle, CPInfShift)):
        return expr
    raise EvaluationUnsupported(f"p-local reduction undefined on {type(expr).__name__}")


# ---------------------------------------------------------------------------
# homology evaluation


def _bcyc_homology(m: int, d: int) -> GroupExpr:
    if d == 0:
        return GroupExpr.free(1)
    if m >= 2 and d > 0 and d % 2 == 1:
        return GroupExpr.cyclic(m)
    return GroupExpr.zero()


def homology(expr, d: int) -> GroupExpr:
    """Integral homology of the expression in one degree."""
    if isinstance(expr, Sphere):
        return GroupExpr.free(1) if d == 0 else GroupExpr.zero()
    if isinstance(expr, SuspOrbit):
        return GroupExpr.free(1) if d in (0, 1) else GroupExpr.zero()
    if isinstance(expr, BCyc):
        return _bcyc_homology(expr.m, d)
    if isinstance(expr, SuspCircle):
        return GroupExpr.free(1) if d in (0, 1) else GroupExpr.zero()
    if isinstance(expr, CPInf):
        return GroupExpr.free(1) if (d >= -2 and d % 2 == 0) else GroupExpr.zero()
    if isinstance(expr, CPInfShift):
        return homology(CPInf(), d - 1)
    if isinstance(expr, Shift):
        return homology(expr.inner, d - expr.k)
    if isinstance(expr, Wedge):
        return GroupExpr.zero().plus(*(homology(e, d) for e in expr.parts))
    if isinstance(expr, CountableWedge):
        return _countable_wedge_homology(expr.family, d)
    if isinstance(expr, HomOrbit):
        return _hom_orbit_homology(expr, d)
    if isinstance(expr, Product):
        if len(expr.parts) == 0:
            return GroupExpr.zero()
        if len(expr.parts) == 1:
            return homology(expr.parts[0], d)
        raise EvaluationUnsupported(
            "homology of a product is not evaluated here (no finite normal form)")
    if isinstance(expr, CountableProduct):
        raise EvaluationUnsupported(
            "homology of a countable product is not evaluated here")
    if isinstance(expr, FiberExpr):
        return fiber_homology(expr.map, d, d).at(d)
    raise EvaluationUnsupported(f"no homology rule for {type(expr).__name__}")


def _countable_wedge_homology(family: tuple, d: int) -> GroupExpr:
    kind = family[0]
    if kind == "bcyc_ppowers":
        p = family[1]
        if d == 0:
            return GroupExpr.countable_free()
        if d > 0 and d % 2 == 1:
            return GroupExpr.torsion_tower(p)
        return GroupExpr.zero()
    if kind == "orbit_ppowers" or kind == "orbits_all":
        return GroupExpr.countable_free() if d in (0, 1) else GroupExpr.zero()
    if kind == "bcyc_all":
        if d == 0:
            return GroupExpr.countable_free()
        if d < 0 or d % 2 == 0:
            return GroupExpr.zero()
        raise EvaluationUnsupported(
            "odd homology of the all-orders classifying wedge has no normal "
            "form; reduce p-locally first")
    if kind == "copies":
        return homology(family[1], d).countable_sum()
    raise EvaluationUnsupported(f"unknown countable family {kind!r}")


def _hom_orbit_homology(expr: HomOrbit, d: int) -> GroupExpr:
    simplified = simplify(expr)
    if not isinstance(simplified, HomOrbit):
        return homology(simplified, d)
    inner, group = simplified.inner, simplified.group
    if isinstance(inner, SuspOrbit) and group[0] == "C":
        # orbits of a rotation action on a circle: a circle times the
        # classifying space of the ineffective kernel
        g = gcd(inner.n, group[1])
        if d == 0:
            return GroupExpr.free(1)
        if d == 1:
            return GroupExpr.free(1).plus(GroupExpr.cyclic(g))
        if d >= 2:
            return GroupExpr.cyclic(g)
        return GroupExpr.zero()
    raise EvaluationUnsupported(
        f"no homotopy-orbit homology rule for {type(inner).__name__}")


def homology_graded(expr, lo: int, hi: int) -> GradedGroup:
    return GradedGroup.from_dict(
        {d: homology(expr, d) for d in range(lo, hi + 1)},
        known_range=(lo, hi))


def fiber_homology(map_expr, lo: int, hi: int) -> GradedGroup:
    """Homology of the fiber of a map expression that carries a degreewise
    realization, via the long exact sequence."""
    data = getattr(map_expr, "graded_data", None)
    if data is None:
        raise EvaluationUnsupported(
            f"map {type(map_expr).__name__} carries no degreewise realization")
    w = homology_graded(map_expr.domain, lo - 1, hi + 1)
    b = homology_graded(map_expr.codomain, lo - 1, hi + 1)
    return les_fiber(w, b, data(), lo, hi)
