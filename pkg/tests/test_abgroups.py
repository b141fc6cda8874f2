import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualcircle.abgroups import (
    ChainComplex,
    FGAbGroup,
    GradedGroup,
    GradedMapData,
    GroupExpr,
    IndeterminateExtension,
    MapDescriptor,
    PeriodicTail,
    StructuralError,
    DegreeOutOfRange,
    homology_at,
    les_exactness_audit,
    les_fiber,
)
from dualcircle.matrices import IntMatrix


class TestFGAbGroup:
    def test_canonical_form(self):
        g = FGAbGroup.from_orders([4, 6, 0])
        assert g.free_rank == 1
        assert g.torsion == (2, 12)

    def test_divisibility_enforced(self):
        with pytest.raises(ValueError):
            FGAbGroup(0, (4, 6))

    def test_direct_sum_recombines(self):
        a = FGAbGroup.from_orders([2])
        b = FGAbGroup.from_orders([15])
        assert a.direct_sum(b) == FGAbGroup.from_orders([30])

    def test_str(self):
        assert str(FGAbGroup.from_orders([0, 0, 2])) == "Z^2 + Z/2"
        assert str(FGAbGroup.zero()) == "0"


class TestGroupExpr:
    def test_prime_power_splitting_makes_equality_iso_invariant(self):
        assert GroupExpr.cyclic(6) == GroupExpr.cyclic(2).plus(GroupExpr.cyclic(3))

    def test_unit_cyclic_dropped(self):
        assert GroupExpr.cyclic(1).is_zero()

    def test_countable_atoms_are_idempotent(self):
        c = GroupExpr.countable_free()
        assert c.plus(c) == c
        s = GroupExpr.countable_tower_sum(5)
        assert s.plus(s) == s

    def test_a_double_tower_is_not_a_tower(self):
        # doubling a tower doubles each cyclic multiplicity
        t = GroupExpr.torsion_tower(5)
        assert t.plus(t) != t
        assert t.plus(t).multiplicity("TorsionTower", 5) == 2

    def test_normalization_idempotent(self):
        g = GroupExpr.free(2).plus(GroupExpr.cyclic(12), GroupExpr.torsion_tower(3))
        again = GroupExpr._make(g.atoms)
        assert again == g

    def test_absorb_free_is_flagged_not_automatic(self):
        g = GroupExpr.free(1).plus(GroupExpr.countable_free())
        assert g != GroupExpr.countable_free()
        assert g.absorb_free() == GroupExpr.countable_free()

    def test_countable_sum(self):
        assert GroupExpr.free(3).countable_sum() == GroupExpr.countable_free()
        assert GroupExpr.torsion_tower(2).countable_sum() == GroupExpr.countable_tower_sum(2)
        with pytest.raises(Exception):
            GroupExpr.cyclic(4).countable_sum()

    def test_round_trip_fg(self):
        g = FGAbGroup.from_orders([0, 4, 2])
        assert GroupExpr.from_fg(g).to_fg() == g

    def test_json_atoms_use_decimal_strings(self):
        obj = GroupExpr.cyclic(8, 2).to_json_obj()
        assert obj == [{"atom": "Zmod", "parameter": "8", "multiplicity": "2"}]

    @given(st.lists(st.sampled_from([
        GroupExpr.free(1), GroupExpr.cyclic(4), GroupExpr.cyclic(9),
        GroupExpr.countable_free(), GroupExpr.torsion_tower(3)]), max_size=5))
    @settings(max_examples=100, deadline=None)
    def test_plus_is_commutative_and_normal(self, parts):
        total = GroupExpr.zero().plus(*parts)
        total_rev = GroupExpr.zero().plus(*reversed(parts))
        assert total == total_rev
        assert GroupExpr._make(total.atoms) == total


class TestChainHomology:
    def test_multiplication_by_two(self):
        cx = ChainComplex({0: 1, 1: 1}, {1: IntMatrix.from_rows([[2]])})
        assert homology_at(cx, 1) == FGAbGroup.zero()
        assert homology_at(cx, 0) == FGAbGroup.from_orders([2])

    def test_zero_differentials(self):
        cx = ChainComplex({0: 3}, {})
        assert homology_at(cx, 0) == FGAbGroup.free(3)

    def test_projective_plane(self):
        cx = ChainComplex(
            {0: 1, 1: 1, 2: 1},
            {1: IntMatrix.from_rows([[0]]), 2: IntMatrix.from_rows([[2]])})
        assert str(homology_at(cx, 0)) == "Z"
        assert str(homology_at(cx, 1)) == "Z/2"
        assert homology_at(cx, 2).is_trivial()

    def test_rejects_non_complexes(self):
        with pytest.raises(StructuralError):
            ChainComplex(
                {0: 1, 1: 1, 2: 1},
                {1: IntMatrix.from_rows([[1]]), 2: IntMatrix.from_rows([[1]])})

    def test_torus(self):
        # one 0-cell, two 1-cells, one 2-cell, all boundaries zero
        cx = ChainComplex({0: 1, 1: 2, 2: 1},
                          {1: IntMatrix.zero(1, 2), 2: IntMatrix.zero(2, 1)})
        assert homology_at(cx, 1) == FGAbGroup.free(2)

    def test_klein_bottle(self):
        # square identification: da = 0, db = 0, d(face) = 2b
        cx = ChainComplex({0: 1, 1: 2, 2: 1},
                          {1: IntMatrix.zero(1, 2),
                           2: IntMatrix.from_rows([[0], [2]])})
        assert homology_at(cx, 0) == FGAbGroup.free(1)
        assert homology_at(cx, 1) == FGAbGroup.from_orders([0, 2])
        assert homology_at(cx, 2).is_trivial()

    def test_three_dimensional_lens_spaces(self):
        for p in (2, 3, 5, 7**5):
            cx = ChainComplex(
                {0: 1, 1: 1, 2: 1, 3: 1},
                {1: IntMatrix.zero(1, 1),
                 2: IntMatrix.from_rows([[p]]),
                 3: IntMatrix.zero(1, 1)})
            assert homology_at(cx, 0) == FGAbGroup.free(1)
            assert homology_at(cx, 1) == FGAbGroup.from_orders([p])
            assert homology_at(cx, 2).is_trivial()
            assert homology_at(cx, 3) == FGAbGroup.free(1)


class TestGradedGroup:
    def test_tail(self):
        gg = GradedGroup.from_dict(
            {0: GroupExpr.free(1)},
            tail=PeriodicTail(start=1, period=2, offset=1, value=GroupExpr.cyclic(2)))
        assert gg.at(3) == GroupExpr.cyclic(2)
        assert gg.at(4).is_zero()

    def test_tail_overlap_rejected(self):
        with pytest.raises(StructuralError):
            GradedGroup.from_dict(
                {2: GroupExpr.free(1)},
                tail=PeriodicTail(start=1, period=2, offset=1, value=GroupExpr.free(1)))

    def test_known_range(self):
        gg = GradedGroup.from_dict({0: GroupExpr.free(1)}, known_range=(-1, 2))
        assert gg.at(2).is_zero()
        with pytest.raises(DegreeOutOfRange):
            gg.at(3)

    def test_shift_and_wedge(self):
        gg = GradedGroup.from_dict({0: GroupExpr.free(1)})
        assert gg.shift(2).at(2) == GroupExpr.free(1)
        w = gg.wedge(gg, -1, 1)
        assert w.at(0) == GroupExpr.free(2)

    def test_json_includes_tail_rule(self):
        gg = GradedGroup.from_dict(
            {0: GroupExpr.free(1)},
            tail=PeriodicTail(start=1, period=2, offset=1, value=GroupExpr.cyclic(3)))
        obj = gg.to_json_obj()
        assert obj["tail"]["period"] == "2"
        assert obj["tail"]["value"] == [
            {"atom": "Zmod", "parameter": "3", "multiplicity": "1"}]
        with_window = gg.to_json_obj(0, 1)
        assert with_window["values"]["1"] == obj["tail"]["value"]


def _graded(values, known=(None, None)):
    return GradedGroup.from_dict(values, known_range=known)


class TestLesFiber:
    def test_zero_base_gives_total_space(self):
        w = _graded({0: GroupExpr.free(2), 3: GroupExpr.cyclic(4)})
        fiber = les_fiber(w, GradedGroup.zero(), GradedMapData.zero(), -1, 4)
        assert fiber.at(0) == GroupExpr.free(2)
        assert fiber.at(3) == GroupExpr.cyclic(4)

    def test_countable_row_example(self):
        w = _graded({0: GroupExpr.countable_free()})
        b = _graded({0: GroupExpr.free(1), -1: GroupExpr.free(1)})
        f = GradedMapData.from_dict({0: MapDescriptor.row_powers(5)})
        fiber = les_fiber(w, b, f, -2, 0)
        assert fiber.at(-2) == GroupExpr.free(1)
        assert fiber.at(-1).is_zero()
        assert fiber.at(0) == GroupExpr.countable_free()
        assert les_exactness_audit(w, b, f, fiber, -2, 0)

    def test_refuses_ambiguous_extension(self):
        w = _graded({0: GroupExpr.free(1)})
        b = _graded({1: GroupExpr.free(1)})
        with pytest.raises(IndeterminateExtension) as err:
            les_fiber(w, b, GradedMapData.zero(), 0, 0)
        assert err.value.degree == 0

    def test_missing_descriptor_is_an_error(self):
        w = _graded({0: GroupExpr.free(1)})
        b = _graded({0: GroupExpr.free(1)})
        with pytest.raises(StructuralError):
            les_fiber(w, b, GradedMapData.zero(), 0, 0)

    def test_mult_descriptor(self):
        w = _graded({0: GroupExpr.free(1)})
        b = _graded({0: GroupExpr.free(1)})
        f = GradedMapData.from_dict({0: MapDescriptor.mult(6)})
        fiber = les_fiber(w, b, f, -1, 0)
        assert fiber.at(-1) == GroupExpr.cyclic(6)
        assert fiber.at(0).is_zero()

    def test_matrix_descriptor(self):
        w = _graded({0: GroupExpr.free(2)})
        b = _graded({0: GroupExpr.free(1)})
        f = GradedMapData.from_dict(
            {0: MapDescriptor.matrix(IntMatrix.from_rows([[2, 4]]))})
        fiber = les_fiber(w, b, f, -1, 0)
        assert fiber.at(0) == GroupExpr.free(1)
        assert fiber.at(-1) == GroupExpr.cyclic(2)

    def test_row_list_gcd(self):
        w = _graded({0: GroupExpr.countable_free()})
        b = _graded({0: GroupExpr.free(1)})
        f = GradedMapData.from_dict({0: MapDescriptor.row_list([4, 6])})
        fiber = les_fiber(w, b, f, -1, 0)
        assert fiber.at(-1) == GroupExpr.cyclic(2)


class TestHomologyWithOrdersBruteForce:
    """Independent check of the subquotient algorithm: enumerate small
    finite complexes element by element and compare the multiset of element
    orders of ker/im with the computed invariant-factor answer (for finite
    abelian groups that multiset determines the isomorphism type)."""

    @staticmethod
    def _elements(orders):
        from itertools import product
        return list(product(*(range(o) for o in orders)))

    @staticmethod
    def _apply(matrix_rows, x, target_orders):
        return tuple(
            sum(matrix_rows[i][j] * x[j] for j in range(len(x))) % target_orders[i]
            for i in range(len(target_orders)))

    @classmethod
    def _element_order(cls, x, orders):
        from math import gcd, lcm
        return lcm(*(o // gcd(o, v) for o, v in zip(orders, x))) if x else 1

    def test_random_small_torsion_complexes(self):
        import random
        from math import gcd

        from dualcircle.abgroups import homology_with_orders
        from dualcircle.matrices import IntMatrix

        rng = random.Random(99)
        for trial in range(40):
            orders_b = [rng.choice((2, 3, 4)) for _ in range(rng.randint(1, 3))]
            orders_c = [rng.choice((2, 3, 4)) for _ in range(rng.randint(1, 2))]
            # well-defined g: entry (i, j) must be a multiple of o_i / gcd(o_i, o_j)
            g_rows = [[(orders_c[i] // gcd(orders_c[i], orders_b[j]))
                       * rng.randint(0, 3)
                       for j in range(len(orders_b))]
                      for i in range(len(orders_c))]
            b_elements = self._elements(orders_b)
            kernel = [x for x in b_elements
                      if not any(self._apply(g_rows, x, orders_c))]
            # f: a few random kernel elements as generators, orders matching
            n_gens = rng.randint(0, 2)
            chosen = [rng.choice(kernel) for _ in range(n_gens)]
            f_cols = chosen
            orders_a = [self._element_order(x, orders_b) for x in chosen]
            f_rows = [[col[i] for col in f_cols] for i in range(len(orders_b))] \
                if f_cols else None
            image = set()
            for coeffs in self._elements(orders_a or []):
                y = tuple(
                    sum(c * col[i] for c, col in zip(coeffs, f_cols)) % orders_b[i]
                    for i in range(len(orders_b)))
                image.add(y)
            if not image:
                image = {tuple(0 for _ in orders_b)}

            def canonical(x):
                return min(tuple((xi + ii) % o for xi, ii, o in zip(x, i, orders_b))
                           for i in image)

            classes = {}
            for x in kernel:
                classes.setdefault(canonical(x), []).append(x)
            # order of a coset: least k with k*x in the image (0 is in it)
            coset_orders = []
            for rep in classes:
                k = 1
                while tuple((k * v) % o for v, o in zip(rep, orders_b)) not in image:
                    k += 1
                coset_orders.append(k)

            got = homology_with_orders(
                d_out=IntMatrix.from_rows(g_rows),
                d_in=IntMatrix.from_rows(f_rows) if f_rows else None,
                orders_here=orders_b,
                orders_below=orders_c)
            # compare group order and the multiset of element orders
            expected_size = len(classes)
            size = 1
            for d in got.torsion:
                size *= d
            assert got.free_rank == 0
            assert size == expected_size, (trial, got, expected_size)
            expected_multiset = sorted(coset_orders)
            produced = sorted(
                self._element_order(x, got.torsion or [1])
                for x in self._elements(got.torsion or [1]))
            assert produced == expected_multiset, (trial, got)


@given(st.lists(st.integers(min_value=0, max_value=64), max_size=6))
@settings(max_examples=150, deadline=None)
def test_group_expr_roundtrips_finitely_generated_groups(orders):
    g = FGAbGroup.from_orders(orders)
    assert GroupExpr.from_fg(g).to_fg() == g
