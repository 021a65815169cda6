"""Hypothesis strategies shared by the property tests."""
from fractions import Fraction

from hypothesis import strategies as st

from k3stab import MukaiVector, StabilityPoint, SurfaceContext

contexts = st.integers(min_value=1, max_value=8).map(SurfaceContext)

small_ints = st.integers(min_value=-40, max_value=40)
vectors = st.builds(MukaiVector, small_ints, small_ints, small_ints)
positive_rank_vectors = st.builds(MukaiVector, st.integers(1, 40), small_ints, small_ints)

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=24)
positive_rationals = st.fractions(min_value=Fraction(1, 24), max_value=10, max_denominator=24)
points = st.builds(StabilityPoint, rationals, positive_rationals)


@st.composite
def context_and_spherical(draw):
    ctx = draw(contexts)
    # r = 1 always works, so the filter above cannot starve for small ranks
    r = draw(st.sampled_from([1, 1, 2, 3, 5]))
    candidates = [n for n in range(-30, 31) if (ctx.d * n * n + 1) % r == 0]
    if not candidates:
        r, candidates = 1, list(range(-30, 31))
    n = draw(st.sampled_from(candidates))
    return ctx, MukaiVector(r, n, (ctx.d * n * n + 1) // r)
