"""Fixed-point combinatorics, Frobenius/restriction algebra, the split-fiber
pullback, and the homology / rational-homotopy tables of the dual circle.

The underlying labelled family is X = the disjoint union over n >= 1 of
circle orbits S^1/C_n.  Genuine fixed points of suspension spectra split
into homotopy-orbit summands indexed by subgroups; the Frobenius map routes
summands by finite transfers plus one fixed-point inclusion, while the
restriction map deletes the deepest orbit summand and relabels.  Everything
here is label-level symbolic algebra with exact homology evaluation at the
leaves, ending in two tables and a verdict about rational coassembly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .abgroups import (
    GradedGroup,
    GradedMapData,
    GroupExpr,
    MapDescriptor,
    les_exactness_audit,
    les_fiber,
)
from .primes import is_prime
from .qspaces import SymbolicQSpace, bousfield_pi_q
from .spectra import (
    CountableProduct,
    CountableWedge,
    CPInfShift,
    DeltaP,
    DifferenceMap,
    FiberExpr,
    HomOrbit,
    MapIdentity,
    NamedMap,
    Product,
    Shift,
    Sphere,
    SuspCircle,
    SuspOrbit,
    Wedge,
    WedgeCircleTransfer,
    fiber_homology,
    homology_graded,
    simplify,
)


class HurewiczRangeError(Exception):
    def __init__(self, degree: int, cap: int):
        self.degree = degree
        self.cap = cap
        super().__init__(
            f"degree {degree} exceeds the homology-to-homotopy window (<= {cap})")


# ---------------------------------------------------------------------------
# labels and fixed points


@dataclass(frozen=True)
class OrbitLabel:
    """The n-th summand of X, the circle modulo its order-n subgroup."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("orbit labels are positive")


def fixed_points_X(m: int, max_label: int) -> list[tuple[OrbitLabel, OrbitLabel]]:
    """Fixed labels of the order-m cyclic action on X, with the standard
    relabeling: the summand n is fixed exactly when m divides n, and is
    identified with summand n/m.

    Returns (original, relabeled) pairs for original labels <= max_label.

    >>> [(a.n, b.n) for a, b in fixed_points_X(6, 12)]
    [(6, 1), (12, 2)]
    """
    if m < 1:
        raise ValueError("m must be positive")
    return [(OrbitLabel(n), OrbitLabel(n // m))
            for n in range(m, max_label + 1, m)]


def delta_p_on_labels(p: int, max_label: int) -> list[tuple[OrbitLabel, OrbitLabel]]:
    """The p-fold power self-map on labels: summand n goes to summand p*n."""
    return [(OrbitLabel(n), OrbitLabel(p * n)) for n in range(1, max_label + 1)]


def class_partition(p: int, n_max: int) -> list[list[int]]:
    """Partition of {1..n_max} where two labels are equivalent when their
    ratio is a power of p; classes are indexed by integers prime to p.

    >>> class_partition(2, 6)
    [[1, 2, 4], [3, 6], [5]]
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    classes = []
    for q in range(1, n_max + 1):
        if q % p == 0:
            continue
        cls = []
        t = q
        while t <= n_max:
            cls.append(t)
            t *= p
        classes.append(cls)
    return classes


# ---------------------------------------------------------------------------
# tom Dieck decomposition and the Frobenius / restriction algebra


@dataclass(frozen=True)
class TomDieckSummand:
    """The summand of the genuine C_{p^n} fixed points indexed by the
    subgroup C_{p^fixed_exp}: the suspension spectrum of the fixed labels,
    taken in homotopy orbits of the complementary quotient."""

    p: int
    fixed_exp: int
    orbit_exp: int

    def expr(self):
        base = CountableWedge(("orbits_all",))  # fixed labels, relabeled
        if self.orbit_exp == 0:
            return base
        return HomOrbit(base, ("C", self.p**self.orbit_exp))


@dataclass(frozen=True)
class TomDieckDecomposition:
    p: int
    n: int
    summands: tuple[TomDieckSummand, ...]


def tom_dieck(p: int, n: int) -> TomDieckDecomposition:
    """The n+1 homotopy-orbit summands of the genuine C_{p^n} fixed points
    of the suspension spectrum of X; the top summand (fixed exponent n)
    carries trivial orbits."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return TomDieckDecomposition(
        p, n,
        tuple(TomDieckSummand(p, i, n - i) for i in range(n + 1)))


@dataclass(frozen=True)
class NormalMap:
    """Normal form of a summand-level map: an optional transfer (orbit
    exponents, descending), an optional fixed-point inclusion (fixed
    exponents, descending), and a count of label identifications.  Transfers
    and inclusions commute past each other and past relabelings, so the
    triple is a faithful normal form for the composites that arise."""

    transfer: tuple[int, int] | None = None
    inclusion: tuple[int, int] | None = None
    relabels: int = 0

    @classmethod
    def make(cls, transfer=None, inclusion=None, relabels=0) -> "NormalMap":
        if transfer is not None:
            a, b = transfer
            if a < b:
                raise ValueError("transfers go down in orbit exponent")
            if a == b:
                transfer = None
        if inclusion is not None:
            a, b = inclusion
            if a < b:
                raise ValueError("inclusions go down in fixed exponent")
            if a == b:
                inclusion = None
        return cls(transfer, inclusion, relabels)

    def then(self, other: "NormalMap") -> "NormalMap":
        """Composite: self first, then other.

        Fixed-point exponents of the later map are expressed in relabeled
        coordinates, so they shift up by the relabel count already applied;
        orbit exponents of transfers are untouched by relabeling.
        """
        transfer = self.transfer
        if other.transfer is not None:
            if transfer is None:
                transfer = other.transfer
            else:
                if transfer[1] != other.transfer[0]:
                    raise ValueError("transfer chain mismatch")
                transfer = (transfer[0], other.transfer[1])
        inclusion = self.inclusion
        if other.inclusion is not None:
            shifted = (other.inclusion[0] + self.relabels,
                       other.inclusion[1] + self.relabels)
            if inclusion is None:
                inclusion = shifted
            else:
                if inclusion[1] != shifted[0]:
                    raise ValueError("inclusion chain mismatch")
                inclusion = (inclusion[0], shifted[1])
        return NormalMap.make(transfer, inclusion, self.relabels + other.relabels)

    def describe(self, p: int) -> str:
        parts = []
        if self.transfer is not None:
            a, b = self.transfer
            parts.append(f"tr^(C_{p}^{a})_(C_{p}^{b})")
        if self.inclusion is not None:
            a, b = self.inclusion
            parts.append(f"incl^(C_{p}^{a})->(C_{p}^{b})")
        if self.relabels:
            parts.append(f"relabel^{self.relabels}")
        return " o ".join(parts) if parts else "id"


@dataclass(frozen=True)
class SummandRoute:
    source: int
    target: int | None  # None when the summand is deleted
    map: NormalMap


@dataclass(frozen=True)
class LevelMap:
    """A map between tom Dieck levels, given by one route per summand."""

    p: int
    level_from: int
    level_to: int
    routes: tuple[SummandRoute, ...]

    def route(self, source: int) -> SummandRoute:
        for r in self.routes:
            if r.source == source:
                return r
        raise KeyError(source)

    def then(self, other: "LevelMap") -> "LevelMap":
        if other.level_from != self.level_to or other.p != self.p:
            raise ValueError("level maps do not compose")
        routes = []
        for r in self.routes:
            if r.target is None:
                routes.append(SummandRoute(r.source, None, NormalMap.make()))
                continue
            nxt = other.route(r.target)
            if nxt.target is None:
                # a deleted composite is the zero route, canonically
                routes.append(SummandRoute(r.source, None, NormalMap.make()))
            else:
                routes.append(SummandRoute(r.source, nxt.target, r.map.then(nxt.map)))
        return LevelMap(self.p, self.level_from, other.level_to, tuple(routes))


def frobenius_route(p: int, n: int, h: int, k: int) -> SummandRoute:
    """Where the inclusion of fixed points sends one summand: at the level
    of the groups G = C_{p^n} >= H = C_{p^h}, the summand of K = C_{p^k}
    lands on the summand of H \\cap K = C_{p^min(h,k)} by a transfer of
    homotopy orbits followed by a fixed-point inclusion."""
    if not (0 <= k <= n and 0 <= h <= n):
        raise ValueError("subgroup exponents out of range")
    target = min(h, k)
    return SummandRoute(
        source=k,
        target=target,
        map=NormalMap.make(transfer=(n - k, h - target), inclusion=(k, target)),
    )


def frobenius_general(p: int, n: int, h: int) -> LevelMap:
    """The full summand routing of the fixed-point inclusion from the
    C_{p^n} level to the C_{p^h} level."""
    return LevelMap(p, n, h, tuple(
        frobenius_route(p, n, h, k) for k in range(n + 1)))


def frobenius_map(p: int, n: int) -> LevelMap:
    """One Frobenius step: level n to level n-1.  Every orbit summand maps
    by a finite transfer; the top fixed-point summand maps by the inclusion.

    >>> [r.map.describe(2) for r in frobenius_map(2, 1).routes]
    ['tr^(C_2^1)_(C_2^0)', 'incl^(C_2^1)->(C_2^0)']
    """
    if n < 1:
        raise ValueError("Frobenius needs a positive level")
    return frobenius_general(p, n, n - 1)


def restriction_map(p: int, n: int) -> LevelMap:
    """One restriction step: deletes the deepest homotopy-orbit summand and
    relabels the remaining summands one step down."""
    if n < 1:
        raise ValueError("restriction needs a positive level")
    routes = [SummandRoute(0, None, NormalMap.make())]
    routes += [SummandRoute(i, i - 1, NormalMap.make(relabels=1))
               for i in range(1, n + 1)]
    return LevelMap(p, n, n - 1, tuple(routes))


def check_fr_commute(p: int, n: int) -> bool:
    """Symbolic equality of the two composites F(R(-)) and R(F(-)) from
    level n down to level n-2."""
    if n < 2:
        raise ValueError("need level at least 2")
    fr = restriction_map(p, n).then(frobenius_map(p, n - 1))
    rf = frobenius_map(p, n).then(restriction_map(p, n - 1))
    return fr == rf


# ---------------------------------------------------------------------------
# the inverse-limit product and its self-maps


def suspension_of_x():
    return CountableWedge(("orbits_all",))


def tr_expr(p: int, truncate_j: int | None = None):
    """The inverse limit of the restriction maps: a desuspended product of
    homotopy-orbit spectra of X, one factor per p-power subgroup.  Pass
    ``truncate_j`` to materialize a finite prefix of the factors."""
    if truncate_j is None:
        return Shift(-1, CountableProduct(("hom_orbit_ppowers", p)))
    return Shift(-1, Product(tuple(
        simplify(HomOrbit(suspension_of_x(), ("C", p**j)))
        for j in range(truncate_j + 1))))


def tr_frobenius_routes(p: int, truncate_j: int) -> list[tuple[int, int, str]]:
    """How the Frobenius self-map acts on the product factors: factor j
    drops to factor j-1 by a finite transfer, and the zeroth factor maps to
    itself by the p-fold power label map."""
    routes = [(0, 0, "delta_p")]
    routes += [(j, j - 1, f"tr^(C_{p}^{j})_(C_{p}^{j - 1})")
               for j in range(1, truncate_j + 1)]
    return routes


@dataclass(frozen=True)
class DeltaPColimit:
    expr: object
    tower: tuple
    final_label: int


def delta_p_colimit(p: int, truncate_at: int = 4) -> DeltaPColimit:
    """The colimit of the p-fold power system on the desuspended circle
    orbits: each step is a label bijection onto the next tower stage, so
    the colimit is a single desuspended circle.

    The truncated tower is returned so callers can check that homology is
    unchanged along it."""
    tower = tuple(Shift(-1, SuspOrbit(p**k)) for k in range(truncate_at + 1))
    return DeltaPColimit(expr=Shift(-1, SuspCircle()), tower=tower,
                         final_label=p**truncate_at)


# ---------------------------------------------------------------------------
# the split-fiber pullback lemma and the E square


@dataclass(frozen=True)
class UpperTriangularMap:
    """A self-map of a product A x B -> A' x B' with components
    [[f, h], [0, g]]."""

    f: object
    h: object
    g: object


@dataclass(frozen=True)
class PullbackSquare:
    top_left: object
    top_right: object
    bottom_left: object
    bottom_right: object
    top_map: object
    left_map: object
    right_map: object
    bottom_map: object


def pullback_split_fiber(a, b, a2, b2, f, g, h) -> PullbackSquare:
    """The homotopy fiber of an upper-triangular map of split fiber
    sequences sits in a pullback square over the first coordinate: the
    fiber of the whole map, the fiber of the corner map g, and the map f,
    glued by (minus) h restricted to the fiber of g.  Pass h = None for a
    vanishing gluing component."""
    phi = UpperTriangularMap(f, h, g)
    right_name = "zero" if h is None else "-h o fiber inclusion"
    return PullbackSquare(
        top_left=FiberExpr(phi),
        top_right=FiberExpr(g),
        bottom_left=a,
        bottom_right=a2,
        top_map=NamedMap("induced projection", FiberExpr(phi), FiberExpr(g)),
        left_map=NamedMap("induced projection", FiberExpr(phi), a),
        right_map=NamedMap(right_name, FiberExpr(g), a2),
        bottom_map=f,
    )


def simplify_degenerate_square(square: PullbackSquare):
    """When the gluing map is zero and the bottom map is an identity, the
    total fiber is the corner fiber; returns None otherwise."""
    if isinstance(square.bottom_map, MapIdentity) \
            and getattr(square.right_map, "name", None) == "zero":
        return square.top_right
    return None


def tc_pullback_square(p: int) -> PullbackSquare:
    """The pullback square computing the reduced p-typical cyclic object:
    corner fiber rewritten (after p-completion) as the wedge of cyclic
    classifying spaces, over the desuspended label family, with bottom map
    (p-fold power minus identity) and right map a wedge of circle
    transfers."""
    x_shift = Shift(-1, suspension_of_x())
    corner = CountableWedge(("bcyc_all",))
    return PullbackSquare(
        top_left=NamedMap("reduced TC", None, None),
        top_right=corner,
        bottom_left=x_shift,
        bottom_right=x_shift,
        top_map=NamedMap("induced projection", None, corner),
        left_map=NamedMap("induced projection", None, x_shift),
        right_map=NamedMap("wedge of circle transfers", corner, x_shift),
        bottom_map=DifferenceMap(DeltaP(p, x_shift), MapIdentity(x_shift)),
    )


def tc_class_square(p: int) -> PullbackSquare:
    """One p-power class of the square above: the summands whose labels are
    p-powers.  Its pullback is the spectrum E."""
    orbits = Shift(-1, CountableWedge(("orbit_ppowers", p)))
    bcycs = CountableWedge(("bcyc_ppowers", p))
    return PullbackSquare(
        top_left=FiberExpr(WedgeCircleTransfer(p)),
        top_right=bcycs,
        bottom_left=orbits,
        bottom_right=orbits,
        top_map=NamedMap("induced projection", None, bcycs),
        left_map=NamedMap("induced projection", None, orbits),
        right_map=WedgeCircleTransfer(p),
        bottom_map=DifferenceMap(DeltaP(p, orbits), MapIdentity(orbits)),
    )


def e_expr(p: int):
    """E as the fiber of the wedge of circle transfers into the desuspended
    circle (the cofiber of the bottom row collapses the p-power tower to a
    single circle)."""
    return FiberExpr(WedgeCircleTransfer(p))


def e_transfer_data(p: int) -> GradedMapData:
    return GradedMapData.from_dict({0: MapDescriptor.row_powers(p)})


def e_homology(p: int, lo: int, hi: int) -> GradedGroup:
    """Integral homology of E in the window [lo, hi].

    >>> h = e_homology(3, -2, 4)
    >>> [str(h.at(d)) for d in range(-2, 5)]
    ['Z', '0', '(+)_k Z', '(+)_k Z/3^k', '0', '(+)_k Z/3^k', '0']
    """
    return fiber_homology(WedgeCircleTransfer(p), lo, hi)


def e_homology_with_descriptor(p: int, degree0: MapDescriptor,
                               lo: int, hi: int) -> GradedGroup:
    """Same fiber computation with the degree-zero transfer row replaced;
    used as a negative control (a zero row must change H_{-1})."""
    w = homology_graded(CountableWedge(("bcyc_ppowers", p)), lo - 1, hi + 1)
    b = homology_graded(Shift(-1, SuspCircle()), lo - 1, hi + 1)
    return les_fiber(w, b, GradedMapData.from_dict({0: degree0}), lo, hi)


def e_exactness_audit(p: int, lo: int, hi: int) -> bool:
    w = homology_graded(CountableWedge(("bcyc_ppowers", p)), lo - 1, hi + 1)
    b = homology_graded(Shift(-1, SuspCircle()), lo - 1, hi + 1)
    fiber = e_homology(p, lo, hi)
    return les_exactness_audit(w, b, e_transfer_data(p), fiber, lo, hi)


# ---------------------------------------------------------------------------
# homology-to-homotopy passage (mod torsion prime to p, bounded window)


def hurewicz_cap(p: int) -> int:
    return 2 * p - 6


def homotopy_from_homology(h: GradedGroup, p: int, lo: int, hi: int) -> GradedGroup:
    """Read homotopy groups off homology, valid modulo torsion prime to p
    and only in degrees <= 2p - 6; the result's known_range enforces the
    window.  Torsion prime to p is dropped (lossy, by design); the values
    fed through here never contain any."""
    cap = hurewicz_cap(p)
    top = min(hi, cap)
    values: dict[int, GroupExpr] = {}
    for d in range(lo, top + 1):
        g = h.at(d)
        values[d] = GroupExpr._make(
            [(kind, param, mult) for kind, param, mult in g.atoms
             if _atom_is_p_primary_or_free(kind, param, p)])
    return GradedGroup.from_dict(values, known_range=(lo, top))


def _vp(m: int, p: int) -> int:
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def _atom_is_p_primary_or_free(kind: str, param, p: int) -> bool:
    if kind in ("Z", "CountableFree"):
        return True
    if kind == "Zmod":
        return param == p ** _vp(param, p)
    if kind in ("TorsionTower", "CountableTowerSum"):
        return param == p
    return True


# ---------------------------------------------------------------------------
# table 1: integral homology of the three wedge components


TABLE1_ROW_LABELS = ("S", "SigmaCP^oo_-1", "E")


def table1(p: int, lo: int = -2, hi: int = 4) -> dict[str, GradedGroup]:
    """Integral homology of the sphere, the suspended stunted projective
    spectrum, and E, per degree in [lo, hi]."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return {
        "S": homology_graded(Sphere(), lo, hi),
        "SigmaCP^oo_-1": homology_graded(CPInfShift(), lo, hi),
        "E": e_homology(p, lo, hi),
    }


# ---------------------------------------------------------------------------
# table 2: rational homotopy of the p-completions


TABLE2_ROW_LABELS = (
    "K(S)",
    "DS^1 ^ K(S)",
    "TC(S)^_p",
    "(DS^1 ^ TC(S))^_p",
    "E^_p",
    "TC(DS^1)^_p",
)

TABLE2_LO, TABLE2_HI = -2, 6


def k_sphere_rational(n: int) -> SymbolicQSpace:
    """Rational homotopy of the algebraic K-theory of the sphere: one line
    in degree 0 and one in each degree 4k+1, k >= 1.  External input
    constant."""
    if n == 0 or (n >= 5 and n % 4 == 1):
        return SymbolicQSpace.rational(1)
    return SymbolicQSpace.zero()


def dual_smash_row(row) -> dict[int, SymbolicQSpace]:
    """Shift-sum rule for smashing with the dual circle (a sphere wedge a
    desuspended sphere): degree n picks up degrees n and n+1."""
    return {n: row(n).plus(row(n + 1)) for n in range(TABLE2_LO, TABLE2_HI + 1)}


def tc_sphere_model_homology(lo: int, hi: int) -> GradedGroup:
    """Integral homology of the wedge modelling the p-complete cyclic
    homology of the sphere: sphere wedge suspended stunted projective."""
    return homology_graded(Wedge((Sphere(), CPInfShift())), lo, hi)


def tc_dual_circle_model_homology(p: int, lo: int, hi: int) -> GradedGroup:
    """Integral homology of sphere + suspended stunted projective + a
    countable wedge of copies of E."""
    base = homology_graded(Wedge((Sphere(), CPInfShift())), lo, hi)
    e_part = e_homology(p, lo, hi).countable_sum(lo, hi)
    return base.wedge(e_part, lo, hi)


@dataclass(frozen=True)
class Table2:
    p: int
    cap: int
    degrees: tuple[int, ...]
    rows: dict[str, dict[int, SymbolicQSpace | None]]  # None = out of range

    def cell(self, label: str, n: int):
        return self.rows[label][n]


def table2(p: int, truncate_out_of_range: bool = False) -> Table2:
    """The six-row rational homotopy table over degrees -2..6.

    Completed rows are only valid in degrees <= 2p - 6; for p < 7 the
    higher columns are marked out of range (None) when truncation is
    allowed, and raise otherwise.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    cap = hurewicz_cap(p)
    if cap < TABLE2_HI and not truncate_out_of_range:
        raise HurewiczRangeError(TABLE2_HI, cap)
    degrees = tuple(range(TABLE2_LO, TABLE2_HI + 1))
    top = min(TABLE2_HI, cap)

    # integral homotopy models (known only through the window cap)
    lo_h = TABLE2_LO - 1
    hi_h = TABLE2_HI + 1
    tcs_h = tc_sphere_model_homology(lo_h, hi_h)
    tcs_pi = homotopy_from_homology(tcs_h, p, lo_h, hi_h)
    dual_tcs_h = tcs_h.shift(-1).wedge(tcs_h, lo_h, hi_h - 1)
    dual_tcs_pi = homotopy_from_homology(dual_tcs_h, p, lo_h, hi_h - 1)
    e_h = e_homology(p, lo_h, hi_h)
    e_pi = homotopy_from_homology(e_h, p, lo_h, hi_h)
    tcd_h = tc_dual_circle_model_homology(p, lo_h, hi_h)
    tcd_pi = homotopy_from_homology(tcd_h, p, lo_h, hi_h)

    def completed_row(pi: GradedGroup):
        def value(n: int):
            if n > top:
                return None
            return bousfield_pi_q(pi, p, n)
        return value

    def input_row(fn):
        def value(n: int):
            if n > top:
                return None
            return fn(n)
        return value

    k_row = input_row(k_sphere_rational)
    dual_k = dual_smash_row(k_sphere_rational)
    rows = {
        "K(S)": {n: k_row(n) for n in degrees},
        "DS^1 ^ K(S)": {n: (dual_k[n] if n <= top else None) for n in degrees},
        "TC(S)^_p": {n: completed_row(tcs_pi)(n) for n in degrees},
        "(DS^1 ^ TC(S))^_p": {n: completed_row(dual_tcs_pi)(n) for n in degrees},
        "E^_p": {n: completed_row(e_pi)(n) for n in degrees},
        "TC(DS^1)^_p": {n: completed_row(tcd_pi)(n) for n in degrees},
    }
    return Table2(p=p, cap=cap, degrees=degrees, rows=rows)


def table2_wedge_check(t: Table2) -> bool:
    """Independent recomputation of the dual-circle row as the normalized
    symbolic wedge of the component rows: the sphere and projective-space
    contributions plus a countable sum of the E row."""
    p = t.p
    top = min(TABLE2_HI, t.cap)
    sphere_pi = homotopy_from_homology(
        homology_graded(Sphere(), TABLE2_LO - 1, TABLE2_HI + 1), p,
        TABLE2_LO - 1, TABLE2_HI + 1)
    cp_pi = homotopy_from_homology(
        homology_graded(CPInfShift(), TABLE2_LO - 1, TABLE2_HI + 1), p,
        TABLE2_LO - 1, TABLE2_HI + 1)
    for n in t.degrees:
        if n > top:
            continue
        expected = t.cell("TC(DS^1)^_p", n)
        e_cell = t.cell("E^_p", n)
        combo = bousfield_pi_q(sphere_pi, p, n) \
            .plus(bousfield_pi_q(cp_pi, p, n)) \
            .plus(e_cell.countable_sum())
        if combo != expected:
            return False
    return True


def dual_tc_shift_sum_check(t: Table2) -> bool:
    """The smashed row must also equal the shift-sum of the completed
    sphere row, wherever both cells sit inside the window."""
    top = min(TABLE2_HI, t.cap)
    base = t.rows["TC(S)^_p"]
    tcs_h = tc_sphere_model_homology(TABLE2_LO - 1, TABLE2_HI + 1)
    tcs_pi = homotopy_from_homology(tcs_h, t.p, TABLE2_LO - 1, TABLE2_HI + 1)
    for n in t.degrees:
        if n > top or n + 1 > t.cap:
            continue
        upper = base[n + 1] if n + 1 <= top else bousfield_pi_q(tcs_pi, t.p, n + 1)
        if t.cell("(DS^1 ^ TC(S))^_p", n) != base[n].plus(upper):
            return False
    return True


# ---------------------------------------------------------------------------
# expected tables (embedded reference fixture)


def _load_fixture() -> dict:
    text = resources.files("dualcircle").joinpath(
        "fixtures/expected_tables.json").read_text()
    return json.loads(text)


_TABLE1_VOCAB = {
    "0": lambda p: GroupExpr.zero(),
    "Z": lambda p: GroupExpr.free(1),
    "Sum_k Z": lambda p: GroupExpr.countable_free(),
    "Sum_k Z/p^k": lambda p: GroupExpr.torsion_tower(p),
}

_TABLE2_VOCAB = {
    "0": SymbolicQSpace.zero(),
    "Q": SymbolicQSpace.rational(1),
    "Q^2": SymbolicQSpace.rational(2),
    "Qp": SymbolicQSpace.padic(1),
    "Qp^2": SymbolicQSpace.padic(2),
    "A": SymbolicQSpace.ext_free_countable(),
    "B": SymbolicQSpace.ext_tower(1),
    "B_oo": SymbolicQSpace.ext_tower_countable(),
}


def expected_table1(p: int) -> dict[str, dict[int, GroupExpr]]:
    fx = _load_fixture()["table1"]
    lo, hi = fx["degrees"]
    out = {}
    for label, cells in fx["rows"].items():
        out[label] = {lo + i: _TABLE1_VOCAB[cell](p) for i, cell in enumerate(cells)}
    return out


def expected_table2() -> dict[str, dict[int, SymbolicQSpace]]:
    fx = _load_fixture()["table2"]
    lo, hi = fx["degrees"]
    out = {}
    for label, cells in fx["rows"].items():
        out[label] = {lo + i: _TABLE2_VOCAB[cell] for i, cell in enumerate(cells)}
    return out


def diff_table1(p: int, computed: dict[str, GradedGroup], lo: int, hi: int) -> list[str]:
    """Cell-for-cell comparison against the embedded reference; returns a
    list of mismatch descriptions (empty on exact agreement)."""
    expected = expected_table1(p)
    problems = []
    for label, row in expected.items():
        for d, cell in row.items():
            if d < lo or d > hi:
                continue
            got = computed[label].at(d)
            if got != cell:
                problems.append(f"table1[{label}][{d}]: got {got}, expected {cell}")
    return problems


def diff_table2(t: Table2) -> list[str]:
    expected = expected_table2()
    problems = []
    for label, row in expected.items():
        for d, cell in row.items():
            got = t.cell(label, d)
            if got is None:
                continue
            if got != cell:
                problems.append(f"table2[{label}][{d}]: got {got}, expected {cell}")
    return problems


# ---------------------------------------------------------------------------
# the coassembly verdict


@dataclass(frozen=True)
class CoassemblyVerdict:
    status: str  # "zero" or "inconclusive"
    degree: int
    failed_hypothesis: str | None
    square: dict[str, str]

    def summary(self) -> str:
        if self.status == "zero":
            return f"coassembly is zero on pi_{self.degree}^Q"
        return f"inconclusive in degree {self.degree}: {self.failed_hypothesis}"


def coassembly_conclusion(i: int, p: int, p_regular: bool) -> CoassemblyVerdict:
    """Assemble the commuting square of rational homotopy groups in degree
    4i and conclude.

    With p regular and p >= 2i + 3: the target corner (dual circle smashed
    with sphere K-theory) is a rational line; the completed dual-circle
    corner vanishes; the right-hand map is rationally injective (an input
    fact about the trace at regular primes), so the top map is zero.

    >>> coassembly_conclusion(1, 5, True).summary()
    'coassembly is zero on pi_4^Q'
    """
    if i < 1:
        raise ValueError("i must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    degree = 4 * i
    if p < 2 * i + 3:
        return CoassemblyVerdict(
            "inconclusive", degree,
            f"window hypothesis fails: p = {p} < 2i + 3 = {2 * i + 3}",
            {})
    if not p_regular:
        return CoassemblyVerdict(
            "inconclusive", degree,
            "regularity hypothesis not established for p",
            {})

    # the four corners at degree 4i
    top_right = k_sphere_rational(degree).plus(k_sphere_rational(degree + 1))
    tcd_h = tc_dual_circle_model_homology(p, degree - 2, degree + 1)
    tcd_pi = homotopy_from_homology(tcd_h, p, degree - 2, degree + 1)
    bottom_left = bousfield_pi_q(tcd_pi, p, degree)
    tcs_h = tc_sphere_model_homology(degree - 2, degree + 2)
    dual_tcs_h = tcs_h.shift(-1).wedge(tcs_h, degree - 2, degree + 1)
    dual_tcs_pi = homotopy_from_homology(dual_tcs_h, p, degree - 2, degree + 1)
    bottom_right = bousfield_pi_q(dual_tcs_pi, p, degree)

    square = {
        "top_left": "pi^Q of K of the dual circle (unknown)",
        "top_right": str(top_right),
        "bottom_left": str(bottom_left),
        "bottom_right": str(bottom_right),
        "right_map": "rationally injective (trace at a regular prime)",
    }
    if top_right == SymbolicQSpace.rational(1) and bottom_left.is_zero() \
            and not bottom_right.is_zero():
        return CoassemblyVerdict("zero", degree, None, square)
    return CoassemblyVerdict(
        "inconclusive", degree, "assembled square did not close", square)
