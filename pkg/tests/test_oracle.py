import dataclasses
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles

from k3stab import (
    POINT,
    STRUCTURE_SHEAF,
    Assumption,
    Grid,
    MukaiVector,
    Region,
    SearchBounds,
    StabilityPoint,
    SurfaceContext,
    Theorem,
    Verdict,
    VerificationStatus,
    certify_A5,
    certify_A11,
    enumerate_destabilizers,
    in_V_X,
    lambda_,
    n_function,
    scan_region,
    self_pairing,
    verify_certificate,
    wall_locus,
)

D1, D3 = SurfaceContext(1), SurfaceContext(3)
B5 = MukaiVector(12, 10, 25)
FLAGS = (Assumption.GIESEKER_STABLE, Assumption.MU_STABLE_LOCALLY_FREE)


class TestEnumerate:
    def test_worked_vector_has_no_candidate(self):
        assert enumerate_destabilizers(B5, StabilityPoint(0, 2), D3, SearchBounds(max_rank=15)) == []

    def test_structure_sheaf_inside_vx(self):
        sigma = StabilityPoint(-2, 1)
        assert certify_A5(STRUCTURE_SHEAF, sigma, SurfaceContext(2), FLAGS).verdict is Verdict.STABLE
        assert enumerate_destabilizers(STRUCTURE_SHEAF, sigma, SurfaceContext(2), SearchBounds(5)) == []

    def test_on_wall_candidate_is_flagged(self):
        v, sigma = MukaiVector(1, -3, -3), StabilityPoint(0, 2)
        cands = enumerate_destabilizers(v, sigma, D1, SearchBounds(6))
        on_wall = [c for c in cands if c.on_wall]
        assert [c.vector for c in on_wall] == [MukaiVector(2, -3, 1)]
        assert n_function(MukaiVector(2, -3, 1), v, sigma, D1) == 0
        assert all(c.n_value > 0 for c in cands if not c.on_wall)

    def test_output_sorted_and_excludes_v(self):
        v, sigma = MukaiVector(1, -3, -3), StabilityPoint(Fraction(-1, 2), 1)
        cands = [c.vector for c in enumerate_destabilizers(v, sigma, D1, SearchBounds(6))]
        assert cands == sorted(cands) and v not in cands

    def test_errors(self):
        with pytest.raises(ValueError, match="lambda"):
            enumerate_destabilizers(STRUCTURE_SHEAF, StabilityPoint(0, 2), D3)
        with pytest.raises(ValueError, match="V\\(X\\)"):
            enumerate_destabilizers(STRUCTURE_SHEAF, StabilityPoint(-1, 1), D1)
        with pytest.raises(ValueError):
            SearchBounds(max_rank=0)

    def test_unpruned_search_finds_more(self):
        sigma = StabilityPoint(0, 2)
        pruned = enumerate_destabilizers(B5, sigma, D3, SearchBounds(6))
        raw = enumerate_destabilizers(B5, sigma, D3, SearchBounds(6, pruning=False))
        assert pruned == [] and MukaiVector(1, 1, 1) in [c.vector for c in raw]

    @settings(max_examples=15, deadline=None)
    @given(st.integers(1, 3), st.integers(1, 5), st.integers(-5, 5), st.integers(-5, 5),
           st.fractions(min_value=-3, max_value=3, max_denominator=3),
           st.fractions(min_value=Fraction(1, 3), max_value=3, max_denominator=3),
           st.booleans())
    def test_matches_naive_loop(self, d, r, n, s, x, y, pruning):
        ctx, v, sigma = SurfaceContext(d), MukaiVector(r, n, s), StabilityPoint(x, y)
        if self_pairing(v, ctx) < -2 or lambda_(v, sigma) == 0 or not in_V_X(sigma, ctx):
            return
        got = sorted(tuple(c.vector) for c in enumerate_destabilizers(v, sigma, ctx, SearchBounds(5, pruning))
                     if abs(c.vector.n) <= 6 and abs(c.vector.s) <= 6)
        assert got == oracles.naive_destabilizers(tuple(v), x, y, d, 5, 6, pruning)


class TestVerify:
    def test_worked_certificates(self):
        sigma = StabilityPoint(0, 2)
        cert = certify_A5(B5, sigma, D3, FLAGS)
        assert verify_certificate(B5, sigma, cert, D3).status is VerificationStatus.VERIFIED
        sigma = StabilityPoint(1, 1)
        cert = certify_A11(STRUCTURE_SHEAF, sigma, D3, FLAGS)
        ver = verify_certificate(STRUCTURE_SHEAF, sigma, cert, D3)
        assert ver and ver.status.value == "no numerical destabilizer found"

    def test_requires_stable(self):
        cert = certify_A5(B5, StabilityPoint(0, 1), D3, FLAGS)
        with pytest.raises(ValueError):
            verify_certificate(B5, StabilityPoint(0, 1), cert, D3)

    def test_forgeries_never_verified(self):
        rng = random.Random(13)
        falsified = unconfirmed = 0
        tried = 0
        while tried < 150:
            d = rng.choice((1, 2, 3))
            ctx = SurfaceContext(d)
            r, n = rng.randint(1, 4), rng.randint(-4, 4)
            v = MukaiVector(r, n, (d * n * n + 1) // r)
            sigma = StabilityPoint(Fraction(rng.randint(-8, 8), rng.randint(1, 3)),
                                   Fraction(rng.randint(1, 6), rng.randint(1, 4)))
            if lambda_(v, sigma) == 0 or self_pairing(v, ctx) < -2:
                continue
            fn = certify_A5 if lambda_(v, sigma) > 0 else certify_A11
            honest = fn(v, sigma, ctx, FLAGS)
            if honest.verdict is Verdict.STABLE or not in_V_X(sigma, ctx):
                continue
            tried += 1
            forged = dataclasses.replace(honest, verdict=Verdict.STABLE)
            ver = verify_certificate(v, sigma, forged, ctx, SearchBounds(8))
            assert ver.status is not VerificationStatus.VERIFIED
            assert ver.recomputed is Verdict.NOT_APPLICABLE
            falsified += ver.status is VerificationStatus.FALSIFIED
            unconfirmed += ver.status is VerificationStatus.UNCONFIRMED
        assert falsified > 0

    def test_forgery_outside_vx_is_falsified(self):
        sigma = StabilityPoint(-1, 1)
        honest = certify_A5(STRUCTURE_SHEAF, sigma, D1, FLAGS)
        forged = dataclasses.replace(honest, verdict=Verdict.STABLE)
        assert verify_certificate(STRUCTURE_SHEAF, sigma, forged, D1).status is VerificationStatus.FALSIFIED


class TestWalls:
    def test_vertical_line(self):
        w = wall_locus(STRUCTURE_SHEAF, POINT, D1)
        assert w.coefficients == (0, 0, 0, -1, 0, 0)
        assert w.describe() == "line x = 0"
        assert all(p.x == 0 and p.y_squared > 0 for p in w.samples)

    def test_circle(self):
        w = wall_locus(MukaiVector(1, 1, 4), STRUCTURE_SHEAF, D3, samples=5)
        assert w.coefficients == oracles.wall_coefficients((1, 1, 4), (1, 0, 1), 3)
        assert w.describe() == "circle (x - 1/2)^2 + y^2 = 7/12"
        assert len(w.samples) == 5
        for p in w.samples:
            assert w.evaluate(p.x, p.y_squared) == 0

    def test_swap_negates(self):
        a, e = MukaiVector(1, 1, 4), STRUCTURE_SHEAF
        assert wall_locus(e, a, D3).coefficients == tuple(-c for c in wall_locus(a, e, D3).coefficients)

    def test_rejects_proportional(self):
        with pytest.raises(ValueError):
            wall_locus(MukaiVector(1, 1, 4), MukaiVector(2, 2, 8), D3)

    def test_rational_sample_points_hit_oracle(self):
        w = wall_locus(STRUCTURE_SHEAF, POINT, D1)
        for p in w.samples:
            assert oracles.n_value((1, 0, 1), (0, 0, 1), p.x, p.y, 1) == 0

    def test_no_real_curve_gives_no_samples(self):
        # 3(x^2 + y^2) - 3x + 1 = 0 has centre 1/2 and radius^2 = 1/4 - 1/3 < 0
        w = wall_locus(MukaiVector(1, 0, -1), MukaiVector(1, 1, 2), D3)
        assert (w.A, w.D, w.F) == (3, -3, 1)
        assert w.samples == ()

    @given(st.integers(1, 4), *[st.integers(-6, 6)] * 6)
    def test_samples_exact_and_no_cross_terms(self, d, r1, n1, s1, r2, n2, s2):
        a, e = MukaiVector(r1, n1, s1), MukaiVector(r2, n2, s2)
        if a.is_proportional_to(e):
            return
        ctx = SurfaceContext(d)
        w = wall_locus(a, e, ctx, samples=4)
        assert w.B == 0 and w.E == 0
        for p in w.samples:
            assert w.evaluate(p.x, p.y_squared) == 0


class TestScan:
    def test_worked_scan(self):
        grid = Grid(-1, 2, Fraction(1, 4), 4, Fraction(1, 4))
        rows = scan_region(B5, grid, D3)
        zero = {r.x for r in rows if r.region is Region.V_ZERO}
        assert zero == {Fraction(5, 6)}
        top_left = [r for r in rows if r.y == 4 and r.x < Fraction(5, 6)]
        assert top_left and all(r.region is Region.V_PLUS for r in top_left)
        for r in rows:
            sigma = StabilityPoint(r.x, r.y)
            assert r.in_vx == in_V_X(sigma, D3).member

    def test_empty_grid(self):
        assert scan_region(B5, Grid(1, 0, 1, 1, 1), D3) == []

    def test_outside_point_carries_witness(self):
        rows = scan_region(STRUCTURE_SHEAF, Grid(0, 0, Fraction(1, 2), Fraction(1, 2), 1), D1)
        assert len(rows) == 1
        assert rows[0].region is Region.OUTSIDE and rows[0].witness == STRUCTURE_SHEAF

    def test_certificate_columns(self):
        rows = scan_region(B5, Grid(0, 0, 2, 2, 1), D3, FLAGS)
        (row,) = rows
        assert dict(row.certificates) == {Theorem.A4: Verdict.NOT_APPLICABLE, Theorem.A5: Verdict.STABLE}
        assert row.csv_fields() == ["0", "2", "true", "V_plus", "A4=NotApplicable;A5=Stable"]

    def test_grid_validation(self):
        with pytest.raises(ValueError):
            Grid(0, 1, 0, 1, Fraction(1, 2))
        with pytest.raises(ValueError):
            Grid(0, 1, 1, 2, 0)
        with pytest.raises(TypeError):
            Grid(0, 1, 1, 2, 0.5)
