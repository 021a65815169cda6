import itertools

import pytest
from hypothesis import given

import oracles
from strategies import context_and_spherical, contexts, vectors

from k3stab import (
    POINT,
    STRUCTURE_SHEAF,
    MukaiVector,
    SurfaceContext,
    euler_form,
    fine_moduli_gcd,
    is_isotropic,
    is_spherical,
    mukai_pairing,
    parse_context,
    parse_vector,
    self_pairing,
    spherical_reflect,
)

D1, D3 = SurfaceContext(1), SurfaceContext(3)
B5 = MukaiVector(12, 10, 25)


class TestTypes:
    def test_context_rejects_nonpositive_and_non_int(self):
        for bad in (0, -2, 1.5, True):
            with pytest.raises(ValueError):
                SurfaceContext(bad)

    def test_context_degree(self):
        assert D3.degree == 6
        assert str(D3) == "d=3"

    def test_vector_rejects_non_integers(self):
        with pytest.raises(TypeError):
            MukaiVector(1, 0.5, 1)
        with pytest.raises(TypeError):
            MukaiVector(True, 0, 1)

    def test_vector_arithmetic(self):
        v = MukaiVector(1, 2, 3)
        assert v + POINT == MukaiVector(1, 2, 4)
        assert v - v == MukaiVector(0, 0, 0)
        assert -v == MukaiVector(-1, -2, -3)
        assert 2 * v == v * 2 == MukaiVector(2, 4, 6)
        assert tuple(v) == (1, 2, 3)

    def test_proportionality(self):
        assert MukaiVector(1, 1, 4).is_proportional_to(MukaiVector(2, 2, 8))
        assert MukaiVector(1, 1, 4).is_proportional_to(MukaiVector(-3, -3, -12))
        assert not MukaiVector(1, 0, 1).is_proportional_to(POINT)

    def test_huge_components_do_not_overflow(self):
        big = 10 ** 30
        v = MukaiVector(big, big, big)
        assert mukai_pairing(v, v, D3) == 6 * big * big - 2 * big * big


class TestPairing:
    @pytest.mark.parametrize("d", [1, 2, 3, 7])
    def test_structure_sheaf_is_spherical(self, d):
        ctx = SurfaceContext(d)
        assert mukai_pairing(STRUCTURE_SHEAF, STRUCTURE_SHEAF, ctx) == -2
        assert mukai_pairing(STRUCTURE_SHEAF, POINT, ctx) == -1

    def test_worked_example_isotropic(self):
        assert mukai_pairing(B5, B5, D3) == 0

    def test_euler_form_examples(self):
        assert euler_form(STRUCTURE_SHEAF, POINT, D3) == 1
        assert euler_form(STRUCTURE_SHEAF, STRUCTURE_SHEAF, D3) == 2
        assert euler_form(MukaiVector(2, 1, 1), MukaiVector(4, 2, 1), D1) == 2

    def test_spherical_and_isotropic_examples(self):
        assert is_spherical(STRUCTURE_SHEAF, D3)
        assert is_spherical(MukaiVector(2, 1, 1), D1)
        assert not is_spherical(B5, D3)
        assert is_isotropic(POINT, D3)
        assert is_isotropic(B5, D3)
        assert is_isotropic(MukaiVector(4, 2, 1), D1)

    def test_exhaustive_small_box_matches_oracle(self):
        rng = range(-3, 4)
        for d in (1, 2):
            ctx = SurfaceContext(d)
            for a in itertools.product(rng, repeat=3):
                for b in itertools.product((-1, 0, 2), repeat=3):
                    v, w = MukaiVector(*a), MukaiVector(*b)
                    assert mukai_pairing(v, w, ctx) == oracles.pairing(a, b, d)
                    assert mukai_pairing(v, w, ctx) == mukai_pairing(w, v, ctx)

    @given(contexts, vectors, vectors, vectors)
    def test_bilinear(self, ctx, u, v, w):
        assert mukai_pairing(u + v, w, ctx) == mukai_pairing(u, w, ctx) + mukai_pairing(v, w, ctx)

    @given(contexts, vectors)
    def test_self_pairing_even(self, ctx, v):
        assert self_pairing(v, ctx) % 2 == 0


class TestReflection:
    def test_reflect_spherical_class_negates_it(self):
        assert spherical_reflect(STRUCTURE_SHEAF, STRUCTURE_SHEAF, D3) == MukaiVector(-1, 0, -1)

    def test_reflect_point_in_structure_sheaf(self):
        for d in (1, 4):
            assert spherical_reflect(POINT, STRUCTURE_SHEAF, SurfaceContext(d)) == MukaiVector(-1, 0, 0)

    def test_reflect_worked_value(self):
        v, a = MukaiVector(4, 2, 2), MukaiVector(2, 1, 1)
        assert oracles.pairing((4, 2, 2), (2, 1, 1), 1) == -4
        out = spherical_reflect(v, a, D1)
        assert out == MukaiVector(-4, -2, -2)
        assert mukai_pairing(out, out, D1) == mukai_pairing(v, v, D1)

    def test_rejects_non_spherical(self):
        with pytest.raises(ValueError):
            spherical_reflect(POINT, B5, D3)

    @given(context_and_spherical(), vectors, vectors)
    def test_isometric_involution(self, ca, v, w):
        ctx, a = ca
        rv, rw = spherical_reflect(v, a, ctx), spherical_reflect(w, a, ctx)
        assert mukai_pairing(rv, rw, ctx) == mukai_pairing(v, w, ctx)
        assert spherical_reflect(rv, a, ctx) == v

    @given(context_and_spherical(), vectors)
    def test_fixes_orthogonal_complement(self, ca, v):
        ctx, a = ca
        if mukai_pairing(v, a, ctx) == 0:
            assert spherical_reflect(v, a, ctx) == v


class TestGcd:
    def test_examples(self):
        assert fine_moduli_gcd(B5, D3) == 1
        assert fine_moduli_gcd(POINT, D3) == 1
        assert fine_moduli_gcd(MukaiVector(12, 10, 24), D3) == 12

    def test_zero_vector(self):
        assert fine_moduli_gcd(MukaiVector(0, 0, 0), D1) == 0

    def test_signs_ignored(self):
        assert fine_moduli_gcd(MukaiVector(-12, -10, -24), D3) == 12


class TestParsing:
    def test_vector_round_trip(self):
        for text in ("12,10,25", "-1,0,-3", " 4 , -2 , 1 "):
            v = parse_vector(text)
            assert parse_vector(str(v)) == v

    @pytest.mark.parametrize("bad", ["1,2", "1,2,3,4", "a,b,c", "1.5,0,1", ""])
    def test_vector_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_vector(bad)

    def test_context(self):
        assert parse_context("d=3") == D3
        assert parse_context("3") == D3
        for bad in ("d=0", "d=-1", "x=3", "3.0"):
            with pytest.raises(ValueError):
                parse_context(bad)
