import pytest

from hopfforge import (
    CharacteristicError,
    Field,
    GroupPresentation,
    HopfForgeError,
    compile_presentation,
    group_algebra,
    make_example,
    solve_antipode,
    sweedler_h4,
    validate,
)


class TestGroupAlgebra:
    def test_z2_basis(self, z2):
        # the formal inverse reduces to g itself
        assert z2.basis(3) == [(), ("g",)]
        assert validate(z2).ok

    def test_laurent_grouplikes(self, laurent):
        words = laurent.grouplikes(3)
        assert len(words) == 7  # t^k, |k| <= 3
        assert ("t", "t") in words and ("t_inv", "t_inv", "t_inv") in words

    def test_trivial_group(self):
        pres = make_example("trivial")
        assert pres.basis(3) == [()]
        assert validate(pres).ok

    def test_relator_validation(self):
        with pytest.raises(HopfForgeError):
            GroupPresentation(("g",), ((("h", 2),),))
        with pytest.raises(HopfForgeError):
            GroupPresentation(("g",), ((),))

    def test_negative_exponent_relator(self):
        # g^2 h^-1 = 1 in the free group quotient: h = g^2
        pres = group_algebra(
            GroupPresentation(("g", "h"), ((("g", 2), ("h", -1)),)), degree_bound=8
        )
        alg = pres.algebra
        assert pres.nf(alg.gen("h")) == pres.nf(alg.parse("g*g"))
        assert validate(pres).ok

    def test_grouplikes_match_group_word_census(self, z3):
        # Z/3 has exactly 3 elements, all of word length <= 2
        assert len(z3.grouplikes(2)) == 3
        assert len(z3.grouplikes(4)) == 3


class TestMonoidBialgebra:
    def test_free_monoid_grouplike_generator(self):
        pres = make_example("grouplike-x")
        assert validate(pres).ok
        assert not pres.is_hopf

    def test_idempotent_used_by_infeasibility(self, idempotent):
        assert validate(idempotent).ok
        table = compile_presentation(idempotent, 2)
        assert solve_antipode(table) is None

    def test_two_generator_free_monoid(self):
        pres = make_example("free-monoid-xy")
        assert validate(pres).ok
        assert len(pres.basis(2)) == 7


class TestSweedler:
    def test_four_dimensional(self, h4):
        assert compile_presentation(h4, 3).dim == 4

    def test_antipode_order(self, h4):
        table = compile_presentation(h4, 3)
        s = solve_antipode(table)
        f = table.field
        s2 = tuple(
            tuple(
                sum((f.mul(s[i][k], s[k][j]) for k in range(4)), f.zero)
                for j in range(4)
            )
            for i in range(4)
        )
        ident = tuple(tuple(f.one if i == j else f.zero for j in range(4)) for i in range(4))
        assert s2 != ident
        s4 = tuple(
            tuple(
                sum((f.mul(s2[i][k], s2[k][j]) for k in range(4)), f.zero)
                for j in range(4)
            )
            for i in range(4)
        )
        assert s4 == ident

    def test_characteristic_three(self):
        pres = sweedler_h4(Field(3), degree_bound=8)
        assert validate(pres).ok

    def test_characteristic_two_rejected(self):
        with pytest.raises(CharacteristicError):
            sweedler_h4(Field(2))


class TestRegistry:
    def test_every_hopf_example_validates(self):
        for name in ["z2", "z3", "z4", "z", "trivial", "sweedler"]:
            pres = make_example(name, degree_bound=8)
            assert pres.is_hopf
            assert validate(pres).ok, name

    def test_every_bialgebra_example_validates(self):
        for name in ["grouplike-x", "free-monoid-xy", "idempotent", "primitive-x"]:
            pres = make_example(name, degree_bound=8)
            assert not pres.is_hopf
            assert validate(pres).ok, name

    def test_unknown_name(self):
        with pytest.raises(HopfForgeError):
            make_example("no-such-thing")
