import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricplex.exact import GF, QQ, Poly, poly_ord, snf_poly, t_power_minus_one, cyclotomic
from toricplex.simplicial import SimplicialComplex, mask_of
from toricplex.zcover import (
    Character, DegreeDecomposition, FClass, b_vector,
    bb_decomposition, direct_oracle, finite_dim_test, free_ranks,
    full_decomposition, monodromy_trivial, prime_set, relevant_orders, support,
    torsion_multiplicities, weighted_boundary,
)

from test_simplicial import RP2_TRIANGLES, cycle4, path3, random_complex, two_k2

CHI_121 = Character((1, 2, 1))
FIELDS = (QQ, GF(2), GF(3))


def random_character(rng, n):
    while True:
        weights = [rng.randint(-3, 3) for _ in range(n)]
        if any(weights):
            break
    chi = Character(weights)
    g = chi.content()
    return Character(tuple(w // g for w in weights))


class TestCharacter:
    def test_normalize_warns(self):
        with pytest.warns(UserWarning):
            assert Character((2, 4)).normalized() == Character((1, 2))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            Character((0, 0)).normalized()

    def test_support(self):
        assert support(CHI_121, 2) == mask_of([0, 2])
        assert support(CHI_121, 0) == mask_of([0, 1, 2])
        assert support(Character.diagonal(4), 7) == mask_of([0, 1, 2, 3])

    def test_support_composite_rejected(self):
        with pytest.raises(ValueError):
            support(CHI_121, 4)

    def test_prime_set(self):
        assert prime_set(CHI_121) == {2}
        assert prime_set(Character.diagonal(3)) == frozenset()
        assert prime_set(Character((1, 6, 1, 0))) == {2, 3}

    def test_relevant_orders(self):
        assert relevant_orders(CHI_121, QQ) == (1, 2)
        assert relevant_orders(CHI_121, GF(2)) == (1,)
        assert relevant_orders(Character((6, 1)), GF(2)) == (1, 3)


class TestBVector:
    def test_char0(self):
        assert b_vector(CHI_121, FClass(2, 0), QQ) == (0, 1, 0)
        assert b_vector(CHI_121, FClass(1, 0), QQ) == (1, 1, 1)

    def test_char2(self):
        assert b_vector(CHI_121, FClass(1, 2), GF(2)) == (1, 2, 1)

    def test_zero_weight_sentinel(self):
        assert b_vector(Character((1, 0)), FClass(1, 0), QQ) == (1, None)

    def test_class_order_coprime(self):
        with pytest.raises(ValueError):
            FClass(2, 2)

    def test_negative_weights_use_absolute_value(self):
        assert b_vector(Character((-2, 1)), FClass(2, 0), QQ) == (1, 0)

    @given(st.integers(0, 100_000))
    @settings(max_examples=40, deadline=None)
    def test_against_poly_ord(self, seed):
        rng = random.Random(seed)
        field = rng.choice(FIELDS)
        # Orders whose cyclotomic image stays irreducible in the field.
        irreducible = {0: (1, 2, 3, 4, 6), 2: (1, 3), 3: (1, 2, 4)}[field.char]
        d = rng.choice(irreducible)
        m = rng.randint(1, 12)
        fclass = FClass(d, field.char)
        got = b_vector(Character((m, 1)), fclass, field)[0]
        expect = poly_ord(t_power_minus_one(m, field), cyclotomic(d, field))
        assert got == expect


class TestFClass:
    def test_char0_metadata(self):
        c = FClass(4, 0)
        assert c.irreducible_degree == 2 and c.count == 1

    def test_charp_metadata(self):
        c = FClass(3, 2)  # Phi_3 irreducible mod 2
        assert c.irreducible_degree == 2 and c.count == 1
        c = FClass(7, 2)  # x^7-1 factors mod 2 into (x-1) and two cubics
        assert c.irreducible_degree == 3 and c.count == 2


class TestTorsionTwoStep:
    def test_path_121_char0(self):
        L = path3()
        assert torsion_multiplicities(L, CHI_121, FClass(1, 0), QQ, 1)[1] == (2,)
        assert torsion_multiplicities(L, CHI_121, FClass(2, 0), QQ, 1)[1] == (1,)

    def test_path_121_char2(self):
        L = path3()
        assert torsion_multiplicities(L, CHI_121, FClass(1, 2), GF(2), 1)[1] == (1, 1)

    def test_xi_matrix_shape(self):
        L = path3()
        entries = [Poly.monomial(QQ, b) for b in b_vector(CHI_121, FClass(1, 0), QQ)]
        mat = weighted_boundary(L, 2, entries)
        sf = snf_poly(mat, QQ)
        assert [f.ord_t() for f in sf.invariant_factors] == [1, 1]


class TestFullDecomposition:
    def test_path_121_char0(self):
        dec = full_decomposition(path3(), CHI_121, QQ)
        assert dec.degrees[0].free_rank == 0
        assert dec.degrees[0].torsion == {1: (1,)}
        assert dec.degrees[1].torsion == {1: (2,), 2: (1,)}
        assert dec.degrees[1].free_rank == 0
        assert dec.degrees[2].normalized().torsion == {}

    def test_path_121_char2(self):
        dec = full_decomposition(path3(), CHI_121, GF(2))
        assert dec.degrees[1].torsion == {1: (1, 1)}

    def test_realization_cone(self):
        # Cone over two points, weight 1 on the base and 2 on the apex:
        # degree-1 homology picks up a nontrivial order-2 primary part.
        L = SimplicialComplex.from_maximal_faces([[0, 2], [1, 2]], 3)
        chi = Character((1, 1, 2))
        dec = full_decomposition(L, chi, QQ)
        assert dec.degrees[1].torsion.get(2) == (1,)
        assert dec == direct_oracle(L, chi, QQ)

    def test_free_ranks_match_fraction_field(self):
        rng = random.Random(3)
        for _ in range(15):
            L = random_complex(rng, n_max=5)
            chi = random_character(rng, L.n)
            field = rng.choice(FIELDS)
            entries = [Poly.zero(field) if w == 0 else t_power_minus_one(abs(w), field)
                       for w in chi.weights]
            counts = L.face_counts()
            i_max = len(counts) - 1
            ranks = [snf_poly(weighted_boundary(L, s, entries), field).rank
                     for s in range(1, i_max + 2)] + [0]
            got = free_ranks(L, chi, field, i_max)
            for i in range(i_max + 1):
                expect = counts[i] - ranks[i] - (ranks[i - 1] if i else 0)
                assert got[i] == expect


class TestOracleEquivalence:
    def test_fixtures(self):
        for field in FIELDS:
            for L in (path3(), cycle4(), two_k2(), SimplicialComplex.simplex(3)):
                chi = Character.diagonal(L.n)
                assert full_decomposition(L, chi, field) == direct_oracle(L, chi, field)
        assert full_decomposition(path3(), CHI_121, QQ) == direct_oracle(path3(), CHI_121, QQ)
        assert full_decomposition(path3(), CHI_121, GF(2)) == \
            direct_oracle(path3(), CHI_121, GF(2))

    @given(st.integers(0, 100_000))
    @settings(max_examples=25, deadline=None)
    def test_random(self, seed):
        rng = random.Random(seed)
        L = random_complex(rng, n_max=6)
        chi = random_character(rng, L.n)
        field = rng.choice(FIELDS)
        assert full_decomposition(L, chi, field, 2) == direct_oracle(L, chi, field, 2)

    def test_widening_class_list_adds_nothing(self):
        L = path3()
        for d in (3, 4, 5):
            mults = torsion_multiplicities(L, CHI_121, FClass(d, 0), QQ, 2)
            assert all(m == () for m in mults)

    def test_class_independence_same_b_vector(self):
        # Orders 3, 5, 15 all divide 15 and none divides 1, so they share a
        # b-vector and must share multiplicities.
        L = SimplicialComplex.from_maximal_faces([[0, 1]], 2)
        chi = Character((15, 1))
        profiles = {d: torsion_multiplicities(L, chi, FClass(d, 2), GF(2), 1)
                    for d in (3, 5, 15)}
        assert profiles[3] == profiles[5] == profiles[15]
        assert full_decomposition(L, chi, GF(2)) == direct_oracle(L, chi, GF(2))


class TestBBDecomposition:
    def test_cycle4(self):
        dec = bb_decomposition(cycle4(), QQ)
        assert dec.degrees[1] == DegreeDecomposition(0, {1: (3,)})
        assert dec.degrees[2] == DegreeDecomposition(1, {})

    def test_path(self):
        dec = bb_decomposition(path3(), QQ)
        assert dec.degrees[1] == DegreeDecomposition(0, {1: (2,)})

    def test_simplices(self):
        from math import comb
        for n in (2, 3, 4):
            L = SimplicialComplex.simplex(n)
            dec = bb_decomposition(L, QQ)
            for i in range(1, n):
                assert dec.degrees[i] == DegreeDecomposition(0, {1: (comb(n - 1, i),)})

    def test_matches_full_on_fixtures(self):
        rp2 = SimplicialComplex.from_maximal_faces(RP2_TRIANGLES, 6)
        for field in (QQ, GF(2)):
            for L in (path3(), cycle4(), two_k2(), rp2):
                nu = Character.diagonal(L.n)
                assert bb_decomposition(L, field, 2) == full_decomposition(L, nu, field, 2)


class TestMonodromyAndFiniteness:
    def test_path_121(self):
        L = path3()
        rep = monodromy_trivial(L, CHI_121, QQ, 1)
        assert not rep.trivial and rep.witness == (1, 2, 1)
        assert not monodromy_trivial(L, CHI_121, GF(2), 1).trivial
        assert finite_dim_test(L, CHI_121, GF(2), 1)
        assert finite_dim_test(L, CHI_121, QQ, 1)

    def test_diagonal_cases(self):
        assert monodromy_trivial(path3(), Character.diagonal(3), QQ, 2).trivial
        rep = monodromy_trivial(cycle4(), Character.diagonal(4), QQ, 2)
        assert not rep.trivial and rep.witness[0] == 2
        assert not finite_dim_test(cycle4(), Character.diagonal(4), QQ, 2)
        assert not finite_dim_test(two_k2(), Character.diagonal(4), QQ, 1)

    @given(st.integers(0, 100_000))
    @settings(max_examples=30, deadline=None)
    def test_trivial_implies_finite_dim(self, seed):
        rng = random.Random(seed)
        L = random_complex(rng, n_max=6)
        chi = random_character(rng, L.n)
        field = rng.choice(FIELDS)
        r = rng.choice((1, 2))
        if monodromy_trivial(L, chi, field, r).trivial:
            assert finite_dim_test(L, chi, field, r)

    def test_implication_is_strict(self):
        # finite dimension without trivial action: the weighted path mod 2
        assert finite_dim_test(path3(), CHI_121, GF(2), 1)
        assert not monodromy_trivial(path3(), CHI_121, GF(2), 1).trivial

    @given(st.integers(0, 100_000))
    @settings(max_examples=20, deadline=None)
    def test_monodromy_matches_oracle_blocks(self, seed):
        rng = random.Random(seed)
        L = random_complex(rng, n_max=5)
        chi = random_character(rng, L.n)
        field = rng.choice(FIELDS)
        r = rng.choice((1, 2))
        dec = direct_oracle(L, chi, field, r)
        oracle_trivial = all(d.is_trivial_action() for d in dec.degrees)
        assert monodromy_trivial(L, chi, field, r).trivial == oracle_trivial


class TestDegreeZero:
    @given(st.integers(0, 100_000))
    @settings(max_examples=20, deadline=None)
    def test_connected_cover_base(self, seed):
        rng = random.Random(seed)
        L = random_complex(rng, n_max=5)
        chi = random_character(rng, L.n)
        field = rng.choice(FIELDS)
        dec = full_decomposition(L, chi, field, 0)
        assert dec.degrees[0] == DegreeDecomposition(0, {1: (1,)})


class TestFormatting:
    def test_notation(self):
        dec = full_decomposition(path3(), CHI_121, QQ)
        assert dec.format_degree(1) == "H_1 = [d=1: e1=2] (+) [d=2: e1=1]"
        dec2 = bb_decomposition(cycle4(), QQ)
        assert dec2.format_degree(2) == "H_2 = L"
        assert dec2.format_degree(1) == "H_1 = [d=1: e1=3]"
