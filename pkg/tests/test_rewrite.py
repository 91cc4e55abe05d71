import random
from fractions import Fraction

import pytest

from hopfforge import (
    DegreeOverflowError,
    FreeAlgebra,
    HopfForgeError,
    Membership,
    basis_up_to_degree,
    complete,
    ideal_contains,
    normal_form,
    tensor_normal_form,
)
from hopfforge.rewrite import residual_overlaps

from helpers import random_poly


@pytest.fixture
def sweedler_system(free_gx):
    rels = [free_gx.parse("g*g - 1"), free_gx.parse("x*x"), free_gx.parse("x*g + g*x")]
    return complete(free_gx, rels, 8)


class TestComplete:
    def test_single_involution_rule(self):
        alg = FreeAlgebra(["g"])
        sys = complete(alg, [alg.parse("g*g - 1")], 4)
        assert [(r.lead, str(r.tail)) for r in sys.rules] == [(("g", "g"), "1")]
        assert sys.fully_confluent

    def test_commutation_rule(self):
        alg = FreeAlgebra(["a", "b"])
        sys = complete(alg, [alg.parse("b*a - a*b")], 4)
        assert [(r.lead, str(r.tail)) for r in sys.rules] == [(("b", "a"), "a*b")]
        assert sys.fully_confluent
        # the one overlap b(ab) = (ba)b resolves: both reduce bab -> abb / aab? no:
        # bab -> (ab)b = abb and b(ab) -> ... both routes reach a*b*b
        assert normal_form(alg.parse("b*a*b"), sys) == alg.parse("a*b*b")

    def test_sweedler_system(self, free_gx, sweedler_system):
        rules = {(r.lead, str(r.tail)) for r in sweedler_system.rules}
        assert rules == {
            (("g", "g"), "1"),
            (("x", "x"), "0"),
            (("x", "g"), "-g*x"),
        }
        assert sweedler_system.fully_confluent

    def test_zero_relation_rejected(self, free_gx):
        with pytest.raises(HopfForgeError):
            complete(free_gx, [free_gx.zero()], 4)

    def test_bound_below_relation_degree_rejected(self, free_gx):
        with pytest.raises(DegreeOverflowError):
            complete(free_gx, [free_gx.parse("g*g*g - 1")], 2)

    def test_truncated_status_reported(self):
        # ab -> ba is not deglex-orientable into a finite system at low bounds:
        # overlaps at degree 4 get deferred with D=3
        alg = FreeAlgebra(["a", "b"])
        sys = complete(alg, [alg.parse("b*b*b - a*a*b")], 3)
        assert not sys.fully_confluent
        assert sys.status == "up-to-degree 3"


class TestNormalForm:
    def test_single_reduction(self):
        alg = FreeAlgebra(["g"])
        sys = complete(alg, [alg.parse("g*g - 1")], 4)
        assert normal_form(alg.parse("g*g*g"), sys) == alg.parse("g")

    def test_sweedler_xgxg(self, free_gx, sweedler_system):
        # xgxg -> -gxxg -> 0 by hand
        assert normal_form(free_gx.parse("x*g*x*g"), sweedler_system).is_zero()

    def test_relations_reduce_to_zero(self, free_gx, sweedler_system):
        for text in ["g*g - 1", "x*x", "x*g + g*x"]:
            assert normal_form(free_gx.parse(text), sweedler_system).is_zero()

    def test_degree_overflow_reported(self, free_gx, sweedler_system):
        with pytest.raises(DegreeOverflowError) as e:
            normal_form(free_gx.word(*["g"] * 9), sweedler_system)
        assert e.value.required == 9

    def test_idempotence_randomized(self, free_gx, sweedler_system):
        rng = random.Random(5)
        for _ in range(50):
            p = random_poly(free_gx, rng, max_terms=5, max_len=4)
            nf = normal_form(p, sweedler_system)
            assert normal_form(nf, sweedler_system) == nf

    def test_linearity_randomized(self, free_gx, sweedler_system):
        rng = random.Random(6)
        for _ in range(50):
            p = random_poly(free_gx, rng, max_len=4)
            q = random_poly(free_gx, rng, max_len=4)
            a, b = Fraction(rng.randrange(-3, 4)), Fraction(rng.randrange(-3, 4))
            lhs = normal_form(p.scale(a) + q.scale(b), sweedler_system)
            rhs = normal_form(p, sweedler_system).scale(a) + \
                normal_form(q, sweedler_system).scale(b)
            assert lhs == rhs

    def test_multiplicative_compatibility_randomized(self, free_gx, sweedler_system):
        rng = random.Random(7)
        for _ in range(50):
            p = random_poly(free_gx, rng, max_len=2)
            q = random_poly(free_gx, rng, max_len=2)
            lhs = normal_form(p * q, sweedler_system)
            pq_nf = normal_form(p, sweedler_system) * normal_form(q, sweedler_system)
            assert lhs == normal_form(pq_nf, sweedler_system)


class TestTensorNormalForm:
    def test_left_factor_in_ideal(self):
        alg = FreeAlgebra(["g", "x"])
        sys = complete(alg, [alg.parse("g*g - 1")], 4)
        t = alg.parse("g*g - 1").tensor(alg.parse("x"))
        assert tensor_normal_form(t, sys).is_zero()

    def test_already_normal(self):
        alg = FreeAlgebra(["g"])
        sys = complete(alg, [alg.parse("g*g - 1")], 4)
        t = alg.parse_tensor("g (#) g")
        assert tensor_normal_form(t, sys) == t

    def test_grouplike_relation_coideal(self):
        alg = FreeAlgebra(["g"])
        sys = complete(alg, [alg.parse("g*g - 1")], 4)
        # Delta(gg - 1) = gg (x) gg - 1 (x) 1; both sides reduce to 1
        t = alg.parse_tensor("g*g (#) g*g - 1 (#) 1")
        assert tensor_normal_form(t, sys).is_zero()


class TestBasis:
    def test_sweedler_basis(self, sweedler_system):
        assert basis_up_to_degree(sweedler_system, 3) == [
            (), ("g",), ("x",), ("g", "x"),
        ]

    def test_cyclic_three(self):
        alg = FreeAlgebra(["g"])
        sys = complete(alg, [alg.parse("g*g*g - 1")], 6)
        assert basis_up_to_degree(sys, 3) == [(), ("g",), ("g", "g")]

    def test_free_algebra_count(self):
        alg = FreeAlgebra(["x", "y"])
        sys = complete(alg, [], 4)
        assert len(basis_up_to_degree(sys, 2)) == 7  # 1 + 2 + 4

    def test_monotone_counts(self, sweedler_system):
        counts = [len(basis_up_to_degree(sweedler_system, d)) for d in range(5)]
        assert counts == sorted(counts)
        assert counts[-1] == 4  # stabilizes at the Sweedler dimension

    def test_exhaustive_scan_oracle(self, sweedler_system):
        # oracle: generate every word and keep those with no rule lead as subword
        leads = [r.lead for r in sweedler_system.rules]
        gens = sweedler_system.algebra.generators
        expected = []
        frontier = [()]
        for _ in range(4):
            expected.extend(frontier)
            frontier = [w + (g,) for w in frontier for g in gens]
        expected.extend(frontier)
        def reducible(w):
            return any(
                w[i : i + len(l)] == l
                for l in leads
                for i in range(len(w) - len(l) + 1)
            )
        expected = [w for w in expected if not reducible(w)]
        assert basis_up_to_degree(sweedler_system, 4) == expected


class TestIdealMembership:
    def test_generator_relation(self):
        alg = FreeAlgebra(["g"])
        sys = complete(alg, [alg.parse("g*g - 1")], 4)
        assert ideal_contains(alg.parse("g*g - 1"), sys).verdict is Membership.YES

    def test_basis_word_definitive_no(self):
        alg = FreeAlgebra(["g"])
        sys = complete(alg, [alg.parse("g*g - 1")], 4)
        result = ideal_contains(alg.parse("g"), sys)
        assert result.verdict is Membership.NO_UP_TO_D
        assert result.definitive  # the system is fully confluent

    def test_sweedler_skew_relation(self, free_gx, sweedler_system):
        assert ideal_contains(free_gx.parse("x*g + g*x"), sweedler_system).verdict \
            is Membership.YES


class TestConfluenceWitness:
    @pytest.mark.parametrize("relations", [
        ["g*g - 1"],
        ["g*g - 1", "x*x", "x*g + g*x"],
        ["g*g*g - 1"],
    ])
    def test_no_residual_overlaps(self, relations):
        alg = FreeAlgebra(["g", "x"])
        sys = complete(alg, [alg.parse(r) for r in relations], 8)
        assert residual_overlaps(sys) == []
