import pytest

from dualcircle.abgroups import GroupExpr, MapDescriptor
from dualcircle.qspaces import SymbolicQSpace
from dualcircle.spectra import (
    BCyc,
    CountableWedge,
    DeltaP,
    DifferenceMap,
    FiberExpr,
    HomOrbit,
    MapIdentity,
    Product,
    Shift,
    Sphere,
    SuspCircle,
    SuspOrbit,
    WedgeCircleTransfer,
    homology,
    simplify,
)
from dualcircle.tc import (
    HurewiczRangeError,
    NormalMap,
    OrbitLabel,
    class_partition,
    check_fr_commute,
    coassembly_conclusion,
    delta_p_colimit,
    delta_p_on_labels,
    diff_table1,
    diff_table2,
    dual_tc_shift_sum_check,
    e_exactness_audit,
    e_homology,
    e_homology_with_descriptor,
    expected_table1,
    fixed_points_X,
    frobenius_general,
    frobenius_map,
    hurewicz_cap,
    pullback_split_fiber,
    restriction_map,
    table1,
    table2,
    table2_wedge_check,
    tc_class_square,
    tc_pullback_square,
    tom_dieck,
    tr_expr,
    tr_frobenius_routes,
)

Z = GroupExpr.free(1)


class TestLabels:
    def test_full_family_is_fixed_by_the_trivial_group(self):
        pairs = fixed_points_X(1, 5)
        assert [(a.n, b.n) for a, b in pairs] == [(n, n) for n in range(1, 6)]

    def test_even_labels(self):
        pairs = fixed_points_X(2, 8)
        assert [(a.n, b.n) for a, b in pairs] == [(2, 1), (4, 2), (6, 3), (8, 4)]

    def test_divisibility_filter(self):
        pairs = fixed_points_X(6, 12)
        assert [(a.n, b.n) for a, b in pairs] == [(6, 1), (12, 2)]

    def test_relabelings_compose(self):
        # fixed by 2 then fixed by 3 equals fixed by 6
        once = dict((a.n, b.n) for a, b in fixed_points_X(2, 36))
        twice = dict((a.n, b.n) for a, b in fixed_points_X(3, 18))
        composite = {n: twice[once[n]] for n in once if once[n] in twice}
        direct = dict((a.n, b.n) for a, b in fixed_points_X(6, 36))
        assert composite == direct

    def test_delta_p_is_injective_onto_multiples(self):
        pairs = delta_p_on_labels(3, 10)
        images = [b.n for _, b in pairs]
        assert images == [3 * n for n in range(1, 11)]
        assert len(set(images)) == len(images)

    def test_label_positivity(self):
        with pytest.raises(ValueError):
            OrbitLabel(0)


class TestClassPartition:
    def test_examples(self):
        assert class_partition(2, 6) == [[1, 2, 4], [3, 6], [5]]
        assert class_partition(3, 3) == [[1, 3], [2]]
        assert class_partition(2, 1) == [[1]]

    def test_classes_biject_with_prime_to_p_integers(self):
        for p in (2, 3, 5):
            classes = class_partition(p, 40)
            reps = [c[0] for c in classes]
            assert reps == [q for q in range(1, 41) if q % p != 0]
            assert sorted(n for c in classes for n in c) == list(range(1, 41))


class TestTomDieck:
    def test_levels(self):
        assert [(s.fixed_exp, s.orbit_exp) for s in tom_dieck(5, 0).summands] == [(0, 0)]
        assert [(s.fixed_exp, s.orbit_exp) for s in tom_dieck(2, 1).summands] == \
            [(0, 1), (1, 0)]
        assert [(s.fixed_exp, s.orbit_exp) for s in tom_dieck(3, 2).summands] == \
            [(0, 2), (1, 1), (2, 0)]

    def test_top_summand_has_trivial_orbits(self):
        for n in range(4):
            assert tom_dieck(7, n).summands[-1].orbit_exp == 0


class TestFrobeniusRestriction:
    def test_first_level_staircase(self):
        routes = frobenius_map(3, 1).routes
        assert routes[0].map == NormalMap.make(transfer=(1, 0))
        assert routes[1].map == NormalMap.make(inclusion=(1, 0))

    def test_middle_summand_at_level_two(self):
        routes = frobenius_map(3, 2).routes
        assert routes[1].map == NormalMap.make(transfer=(1, 0))
        assert routes[1].target == 1

    def test_iterated_equals_direct(self):
        for p in (2, 3):
            direct = frobenius_general(p, 4, 0)
            step = frobenius_map(p, 4)
            for lvl in (3, 2, 1):
                step = step.then(frobenius_map(p, lvl))
            assert step == direct

    def test_restriction_deletes_one_summand(self):
        for n in (1, 2, 3):
            rmap = restriction_map(5, n)
            deleted = [r for r in rmap.routes if r.target is None]
            assert len(deleted) == 1 and deleted[0].source == 0

    def test_double_restriction_deletes_two(self):
        composite = restriction_map(5, 3).then(restriction_map(5, 2))
        deleted = [r for r in composite.routes if r.target is None]
        assert [r.source for r in deleted] == [0, 1]

    def test_fr_commute(self):
        for p in (2, 3, 5):
            for n in (2, 3, 4):
                assert check_fr_commute(p, n), (p, n)

    def test_prop_routing_rule_on_all_subgroup_pairs(self):
        p, n = 2, 4
        for h in range(n + 1):
            level = frobenius_general(p, n, h)
            for k in range(n + 1):
                r = level.route(k)
                assert r.target == min(h, k)
                expected = NormalMap.make(
                    transfer=(n - k, h - min(h, k)),
                    inclusion=(k, min(h, k)))
                assert r.map == expected

    def test_transfer_chain_mismatch_raises(self):
        a = NormalMap.make(transfer=(3, 2))
        b = NormalMap.make(transfer=(1, 0))
        with pytest.raises(ValueError):
            a.then(b)


class TestTrExpr:
    def test_zeroth_factor_is_the_desuspended_family(self):
        t = tr_expr(2, truncate_j=2)
        inner = t.inner
        assert isinstance(inner, Product)
        assert inner.parts[0] == CountableWedge(("orbits_all",))

    def test_lazy_form_is_a_desuspended_countable_product(self):
        from dualcircle.spectra import CountableProduct
        t = tr_expr(2)
        assert t == Shift(-1, CountableProduct(("hom_orbit_ppowers", 2)))

    def test_frobenius_routes_on_the_product(self):
        routes = tr_frobenius_routes(3, 3)
        assert routes[0] == (0, 0, "delta_p")
        assert routes[1][0:2] == (1, 0)

    def test_orbit_evaluation_used_downstream(self):
        assert simplify(HomOrbit(SuspOrbit(7), ("S1",))) == BCyc(7)


class TestDeltaPColimit:
    def test_collapses_to_a_single_circle(self):
        col = delta_p_colimit(2)
        assert col.expr == Shift(-1, SuspCircle())
        col3 = delta_p_colimit(3)
        assert col3.expr == Shift(-1, SuspCircle())

    def test_truncated_tower_has_constant_homology(self):
        col = delta_p_colimit(5, truncate_at=4)
        assert col.final_label == 5**4
        for d in (-1, 0, 1):
            values = {homology(stage, d) for stage in col.tower}
            assert len(values) == 1
            assert homology(col.expr, d) in values


class TestPullbackSquare:
    def test_degenerate_instance(self):
        from dualcircle.tc import simplify_degenerate_square
        s = Sphere()
        sq = pullback_split_fiber(
            s, BCyc(2), s, BCyc(2),
            f=MapIdentity(s), g=MapIdentity(BCyc(2)), h=None)
        assert isinstance(sq.top_right, FiberExpr)
        assert sq.bottom_left == s
        # vanishing gluing map and identity bottom: fiber is the corner fiber
        assert simplify_degenerate_square(sq) == FiberExpr(MapIdentity(BCyc(2)))

    def test_non_degenerate_square_is_not_simplified(self):
        from dualcircle.tc import simplify_degenerate_square
        sq = tc_class_square(5)
        assert simplify_degenerate_square(sq) is None

    def test_global_square_shape(self):
        sq = tc_pullback_square(3)
        assert sq.top_right == CountableWedge(("bcyc_all",))
        assert isinstance(sq.bottom_map, DifferenceMap)
        assert isinstance(sq.bottom_map.f, DeltaP)
        assert isinstance(sq.bottom_map.g, MapIdentity)

    def test_class_square_is_the_e_square(self):
        sq = tc_class_square(3)
        assert sq.top_left == FiberExpr(WedgeCircleTransfer(3))
        assert sq.top_right == CountableWedge(("bcyc_ppowers", 3))
        assert sq.right_map == WedgeCircleTransfer(3)
        assert sq.bottom_left == Shift(-1, CountableWedge(("orbit_ppowers", 3)))
        assert isinstance(sq.bottom_map, DifferenceMap)


class TestEHomology:
    def test_printed_row(self):
        h = e_homology(2, -2, 4)
        expected = [Z, GroupExpr.zero(), GroupExpr.countable_free(),
                    GroupExpr.torsion_tower(2), GroupExpr.zero(),
                    GroupExpr.torsion_tower(2), GroupExpr.zero()]
        assert [h.at(d) for d in range(-2, 5)] == expected

    def test_bottom_degree_alone(self):
        assert e_homology(7, -2, -2).at(-2) == Z

    def test_exactness_audit(self):
        for p in (2, 3, 5):
            assert e_exactness_audit(p, -2, 4)

    def test_negative_control_changes_h_minus_one(self):
        sabotaged = e_homology_with_descriptor(3, MapDescriptor.zero(), -2, 0)
        assert sabotaged.at(-1) == Z  # reference value is 0
        assert e_homology(3, -2, 0).at(-1).is_zero()


class TestTables:
    def test_table1_exact_for_small_primes(self):
        for p in (2, 3, 5):
            assert diff_table1(p, table1(p, -2, 4), -2, 4) == []

    def test_table1_rejects_composites(self):
        with pytest.raises(ValueError):
            table1(6, -2, 4)

    def test_table2_exact_at_seven(self):
        t = table2(7)
        assert diff_table2(t) == []
        assert t.cap == 8

    def test_table2_cross_checks(self):
        t = table2(7)
        assert dual_tc_shift_sum_check(t)
        assert table2_wedge_check(t)

    def test_table2_specific_cells(self):
        t = table2(7)
        assert t.cell("E^_p", -2) == SymbolicQSpace.padic(1)
        assert t.cell("E^_p", 0) == SymbolicQSpace.ext_free_countable()
        assert t.cell("TC(DS^1)^_p", 1) == SymbolicQSpace.ext_tower_countable()
        assert t.cell("(DS^1 ^ TC(S))^_p", -1) == SymbolicQSpace.padic(2)

    def test_truncation_markers(self):
        with pytest.raises(HurewiczRangeError):
            table2(3)
        t = table2(3, truncate_out_of_range=True)
        assert t.cap == 0
        assert t.cell("E^_p", 0) is not None
        assert all(t.cell(label, d) is None
                   for label in t.rows for d in range(1, 7))
        assert diff_table2(t) == []

    def test_truncation_at_five(self):
        t = table2(5, truncate_out_of_range=True)
        assert hurewicz_cap(5) == 4
        assert t.cell("E^_p", 4) is not None
        assert t.cell("E^_p", 5) is None
        assert diff_table2(t) == []

    def test_tiny_prime_keeps_only_the_bottom_column(self):
        t = table2(2, truncate_out_of_range=True)
        assert t.cap == -2
        assert t.cell("E^_p", -2) == SymbolicQSpace.padic(1)
        assert t.cell("E^_p", -1) is None
        assert diff_table2(t) == []

    def test_row_order_is_canonical(self):
        from dualcircle.tc import TABLE1_ROW_LABELS, TABLE2_ROW_LABELS
        assert tuple(table1(3)) == TABLE1_ROW_LABELS
        assert tuple(table2(7).rows) == TABLE2_ROW_LABELS


class TestCoassembly:
    def test_regular_prime_window(self):
        v = coassembly_conclusion(1, 5, True)
        assert v.status == "zero"
        assert v.summary() == "coassembly is zero on pi_4^Q"
        assert v.square["top_right"] == "Q"
        assert v.square["bottom_left"] == "0"

    def test_regularity_gate(self):
        v = coassembly_conclusion(1, 5, False)
        assert v.status == "inconclusive"
        assert "regularity" in v.failed_hypothesis

    def test_window_gate(self):
        v = coassembly_conclusion(3, 7, True)
        assert v.status == "inconclusive"
        assert "2i + 3" in v.failed_hypothesis

    def test_higher_degree(self):
        v = coassembly_conclusion(2, 7, True)
        assert v.status == "zero"
        assert v.degree == 8

    def test_much_higher_degree(self):
        v = coassembly_conclusion(5, 13, True)
        assert v.status == "zero"
        assert v.degree == 20

    def test_input_validation(self):
        with pytest.raises(ValueError):
            coassembly_conclusion(0, 5, True)
        with pytest.raises(ValueError):
            coassembly_conclusion(1, 4, True)


class TestExpectedFixture:
    def test_reference_row_parametrizes_by_prime(self):
        e2 = expected_table1(2)["E"]
        e5 = expected_table1(5)["E"]
        assert e2[1] == GroupExpr.torsion_tower(2)
        assert e5[1] == GroupExpr.torsion_tower(5)
        assert e2[-2] == e5[-2] == Z
