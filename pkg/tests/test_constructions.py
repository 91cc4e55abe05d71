from fractions import Fraction

import pytest

from hopfforge import (
    HopfForgeError,
    HopfMap,
    check_hopf_map,
    coequalizer,
    coproduct,
    induced_from_cocone,
    induced_from_coeq,
    validate,
)


def dihedral_word_counts(max_len):
    """Independent census of Z/2 * Z/2: reduced words alternate two letters."""
    # one word of length 0; two words of every positive length (start with a or b)
    return [1] + [2] * max_len


@pytest.fixture(scope="module")
def z2_pair_coproduct(request):
    z2 = request.getfixturevalue("z2")
    return coproduct([z2, z2], degree_bound=8)


@pytest.fixture(scope="module")
def times4_coeq(request):
    laurent = request.getfixturevalue("laurent")
    alg = laurent.algebra
    f = HopfMap(laurent, laurent, {"t": alg.parse("t*t*t*t"),
                                   "t_inv": alg.parse("t_inv*t_inv*t_inv*t_inv")})
    g = HopfMap.identity(laurent)
    assert check_hopf_map(f) and check_hopf_map(g)
    return coequalizer(f, g)


class TestCoproduct:
    def test_single_factor_is_isomorphic_copy(self, h4):
        result = coproduct([h4])
        pres = result.presentation
        assert pres.algebra.generators == h4.algebra.generators
        assert set(pres.relations) == set(h4.relations)
        assert pres.delta == h4.delta
        assert pres.antipode == h4.antipode
        assert validate(pres).ok

    def test_two_z2_factors(self, z2_pair_coproduct):
        pres = z2_pair_coproduct.presentation
        assert validate(pres).ok
        assert len(pres.grouplikes(3)) == 7  # infinite dihedral words of length <= 3

    def test_renaming_disjointness(self, z2_pair_coproduct):
        renamings = z2_pair_coproduct.labeling.renamings
        images = [set(r.values()) for r in renamings]
        assert images[0] & images[1] == set()
        assert images[0] | images[1] == set(
            z2_pair_coproduct.presentation.algebra.generators
        )

    def test_inclusions_are_hopf_maps(self, z2_pair_coproduct):
        for q in z2_pair_coproduct.labeling.inclusions:
            assert check_hopf_map(q)

    def test_mixed_factors_validate(self, h4, z2):
        result = coproduct([h4, z2], degree_bound=8)
        pres = result.presentation
        assert validate(pres).ok
        for g in pres.algebra.generators:
            assert pres.antipode_axiom_check(pres.algebra.gen(g))

    def test_field_mismatch_rejected(self, z2):
        from hopfforge import Field, make_example

        z2_f3 = make_example("z2", Field(3), degree_bound=8)
        with pytest.raises(HopfForgeError):
            coproduct([z2, z2_f3])

    def test_associativity_up_to_basis_counts(self, z2, z3, h4):
        left = coproduct([coproduct([z2, z3], degree_bound=8).presentation, h4],
                         degree_bound=8).presentation
        right = coproduct([z2, coproduct([z3, h4], degree_bound=8).presentation],
                          degree_bound=8).presentation
        for d in range(5):
            assert len(left.basis(d)) == len(right.basis(d))
        assert validate(left).ok and validate(right).ok


class TestCoequalizer:
    def test_equal_maps_change_nothing(self, h4):
        ident = HopfMap.identity(h4)
        result = coequalizer(ident, ident)
        assert result.presentation.basis(4) == h4.basis(4)
        # projection is bijective on basis words
        pi = result.projection
        images = {tuple(pi(h4.algebra.poly({w: Fraction(1)})).terms) for w in h4.basis(4)}
        assert len(images) == len(h4.basis(4))

    def test_times4_on_laurent_gives_z3(self, times4_coeq):
        pres = times4_coeq.presentation
        for d in range(2, 6):
            assert len(pres.basis(d)) == 3
        assert validate(pres).ok

    def test_collapse_to_base_field(self, z2):
        alg = z2.algebra
        f = HopfMap.identity(z2)
        g = HopfMap(z2, z2, {"g": alg.one(), "g_inv": alg.one()})
        assert check_hopf_map(g)
        result = coequalizer(f, g)
        assert result.presentation.basis(4) == [()]

    def test_hopf_ideal_conditions_on_added_relations(self, times4_coeq):
        # the executable content of the Hopf-ideal remark: each added relation
        # has eps = 0, Delta reducing to 0 in the tensor quotient, S reducing to 0
        pres = times4_coeq.presentation
        f, g = times4_coeq.pair
        for b in f.source.algebra.generators:
            r = f.images[b] - g.images[b]
            assert pres.eps_of(r) == pres.algebra.field.zero
            assert pres.delta_of(r).is_zero()
            assert pres.s_of(r).is_zero()

    def test_projection_equalizes(self, times4_coeq):
        pres = times4_coeq.presentation
        pi = times4_coeq.projection
        f, g = times4_coeq.pair
        for b in f.source.algebra.generators:
            assert pres.nf(pi(f.images[b]) - pi(g.images[b])).is_zero()


class TestInducedFromCoeq:
    def test_projection_factors_as_identity(self, times4_coeq):
        h = times4_coeq.projection
        induced = induced_from_coeq(h, times4_coeq)
        ident = HopfMap.identity(times4_coeq.presentation)
        assert induced.images == ident.images
        assert check_hopf_map(induced)

    def test_factoring_into_z3(self, times4_coeq, z3, laurent):
        # 4 = 1 mod 3, so t -> g equalizes (t -> t^4, id)
        h = HopfMap(laurent, z3, {"t": z3.algebra.parse("g"),
                                  "t_inv": z3.algebra.parse("g*g")})
        assert check_hopf_map(h)
        induced = induced_from_coeq(h, times4_coeq)
        assert check_hopf_map(induced)
        # factorization: induced after projection equals h on generators
        pi = times4_coeq.projection
        for b in laurent.algebra.generators:
            assert induced(pi.images[b]) == h(laurent.algebra.gen(b))

    def test_non_equalizing_map_rejected(self, times4_coeq, laurent):
        bad = HopfMap.identity(laurent)
        with pytest.raises(HopfForgeError) as e:
            induced_from_coeq(bad, times4_coeq)
        assert "t" in str(e.value)


class TestInducedFromCocone:
    def test_cocone_of_inclusions_is_identity(self, z2_pair_coproduct):
        incls = list(z2_pair_coproduct.labeling.inclusions)
        u = induced_from_cocone(incls, z2_pair_coproduct.labeling)
        assert u.images == HopfMap.identity(z2_pair_coproduct.presentation).images

    def test_codiagonal(self, z2, z2_pair_coproduct):
        legs = [HopfMap.identity(z2), HopfMap.identity(z2)]
        u = induced_from_cocone(legs, z2_pair_coproduct.labeling)
        assert check_hopf_map(u)
        for q, leg in zip(z2_pair_coproduct.labeling.inclusions, legs):
            for b in z2.algebra.generators:
                assert u(q.images[b]) == leg(z2.algebra.gen(b))

    def test_uniqueness_on_basis_words(self, z2, z2_pair_coproduct):
        # any map agreeing with the legs on renamed generators agrees everywhere
        legs = [HopfMap.identity(z2), HopfMap.identity(z2)]
        u = induced_from_cocone(legs, z2_pair_coproduct.labeling)
        v = HopfMap(z2_pair_coproduct.presentation, z2, dict(u.images))
        pres = z2_pair_coproduct.presentation
        for w in pres.basis(3):
            p = pres.algebra.poly({w: Fraction(1)})
            assert u(p) == v(p)
