import random

import pytest

from dualcircle.abgroups import GroupExpr
from dualcircle.spectra import (
    BCyc,
    CountableProduct,
    CountableWedge,
    CPInfShift,
    EvaluationUnsupported,
    HomOrbit,
    Product,
    Shift,
    Sphere,
    SuspCircle,
    SuspOrbit,
    Wedge,
    WedgeCircleTransfer,
    fiber_homology,
    homology,
    homology_graded,
    plocal_reduce,
    simplify,
)

Z = GroupExpr.free(1)


class TestAtomHomology:
    def test_sphere(self):
        assert homology(Sphere(), 0) == Z
        assert homology(Sphere(), 1).is_zero()

    def test_orbit_circles(self):
        assert homology(SuspOrbit(12), 0) == Z
        assert homology(SuspOrbit(12), 1) == Z
        assert homology(SuspOrbit(12), 2).is_zero()

    def test_classifying_spaces(self):
        assert homology(BCyc(4), 0) == Z
        assert homology(BCyc(4), 3) == GroupExpr.cyclic(4)
        assert homology(BCyc(4), 2).is_zero()
        assert homology(BCyc(1), 5).is_zero()

    def test_stunted_projective(self):
        for d in (-1, 1, 3, 5):
            assert homology(CPInfShift(), d) == Z
        for d in (-2, 0, 2, 4):
            assert homology(CPInfShift(), d).is_zero()

    def test_shift_moves_degrees(self):
        e = Shift(-1, SuspCircle())
        assert homology(e, -1) == Z
        assert homology(e, 0) == Z
        assert homology(e, 1).is_zero()

    def test_wedge_is_additive(self):
        e = Wedge((Sphere(), CPInfShift()))
        assert homology(e, 0) == Z
        assert homology(e, -1) == Z

    def test_additivity_and_shift_on_random_expressions(self):
        rng = random.Random(11)
        atoms = [Sphere(), SuspOrbit(3), BCyc(9), SuspCircle(), CPInfShift()]
        for _ in range(50):
            parts = tuple(rng.choice(atoms) for _ in range(rng.randint(1, 3)))
            k = rng.randint(-2, 2)
            d = rng.randint(-3, 5)
            wedge = Wedge(parts)
            total = GroupExpr.zero().plus(*(homology(e, d) for e in parts))
            assert homology(wedge, d) == total
            assert homology(Shift(k, wedge), d + k) == total


class TestCountableFamilies:
    def test_power_tower_wedge(self):
        fam = CountableWedge(("bcyc_ppowers", 5))
        assert homology(fam, 0) == GroupExpr.countable_free()
        assert homology(fam, 3) == GroupExpr.torsion_tower(5)
        assert homology(fam, 2).is_zero()

    def test_orbit_families(self):
        fam = CountableWedge(("orbits_all",))
        assert homology(fam, 1) == GroupExpr.countable_free()
        assert homology(fam, 2).is_zero()

    def test_copies(self):
        fam = CountableWedge(("copies", SuspOrbit(3)))
        assert homology(fam, 0) == GroupExpr.countable_free()
        assert homology(fam, 1) == GroupExpr.countable_free()
        fam = CountableWedge(("copies", CountableWedge(("bcyc_ppowers", 3))))
        assert homology(fam, 1) == GroupExpr.countable_tower_sum(3)

    def test_copies_of_fixed_order_torsion_refused(self):
        # countably many Z/3 summands are not a tower sum; no normal form
        fam = CountableWedge(("copies", BCyc(3)))
        with pytest.raises(Exception):
            homology(fam, 1)

    def test_all_orders_wedge_refuses_odd_degrees(self):
        fam = CountableWedge(("bcyc_all",))
        assert homology(fam, 0) == GroupExpr.countable_free()
        with pytest.raises(EvaluationUnsupported):
            homology(fam, 1)


class TestSimplify:
    def test_shift_merging(self):
        assert simplify(Shift(1, Shift(-1, Sphere()))) == Sphere()
        assert simplify(Shift(2, Shift(1, Sphere()))) == Shift(3, Sphere())

    def test_trivial_orbits(self):
        assert simplify(HomOrbit(Sphere(), ("C", 1))) == Sphere()

    def test_circle_orbits_become_classifying_spaces(self):
        assert simplify(HomOrbit(SuspOrbit(6), ("S1",))) == BCyc(6)
        assert simplify(HomOrbit(CountableWedge(("orbits_all",)), ("S1",))) == \
            CountableWedge(("bcyc_all",))

    def test_finite_cyclic_orbits_of_an_orbit_circle(self):
        e = HomOrbit(SuspOrbit(6), ("C", 4))
        assert homology(e, 0) == Z
        assert homology(e, 1) == Z.plus(GroupExpr.cyclic(2))
        assert homology(e, 2) == GroupExpr.cyclic(2)


class TestPlocalReduce:
    def test_examples(self):
        assert plocal_reduce(BCyc(6), 3) == BCyc(3)
        assert plocal_reduce(BCyc(5), 3) == BCyc(1)
        assert plocal_reduce(SuspOrbit(12), 2) == SuspOrbit(4)

    def test_recurses(self):
        e = Shift(-1, Wedge((BCyc(6), SuspOrbit(10))))
        assert plocal_reduce(e, 2) == Shift(-1, Wedge((BCyc(2), SuspOrbit(2))))

    def test_refuses_lazy_families(self):
        with pytest.raises(EvaluationUnsupported):
            plocal_reduce(CountableWedge(("orbits_all",)), 2)


class TestProducts:
    def test_infinite_products_are_never_evaluated(self):
        with pytest.raises(EvaluationUnsupported):
            homology(CountableProduct(("hom_orbit_ppowers", 2)), 0)
        with pytest.raises(EvaluationUnsupported):
            homology(Product((Sphere(), Sphere())), 0)


class TestFiber:
    def test_wedge_transfer_fiber(self):
        h = fiber_homology(WedgeCircleTransfer(2), -2, 2)
        assert h.at(-2) == Z
        assert h.at(-1).is_zero()
        assert h.at(0) == GroupExpr.countable_free()
        assert h.at(1) == GroupExpr.torsion_tower(2)

    def test_graded_window(self):
        g = homology_graded(Sphere(), -1, 1)
        assert g.at(0) == Z
        assert g.known_range == (-1, 1)


class TestStuntedProjective:
    def test_shifted_rule_is_the_shift_of_the_even_rule(self):
        from dualcircle.spectra import CPInf
        for d in range(-4, 8):
            assert homology(CPInfShift(), d) == homology(Shift(1, CPInf()), d)

    def test_even_cells_from_minus_two(self):
        from dualcircle.spectra import CPInf
        assert homology(CPInf(), -2) == Z
        assert homology(CPInf(), -3).is_zero()
        assert homology(CPInf(), -4).is_zero()
        assert homology(CPInf(), 6) == Z


class TestFiberExprEvaluation:
    def test_fiber_expression_homology_matches_the_fiber_computation(self):
        from dualcircle.tc import e_expr, e_homology
        e = e_expr(5)
        for d in (-2, -1, 0, 1, 2):
            assert homology(e, d) == e_homology(5, d, d).at(d)
