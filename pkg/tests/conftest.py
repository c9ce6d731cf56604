from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from holomatch.scalar_linalg import Scalar

settings.register_profile("repo", deadline=None, max_examples=60)
settings.load_profile("repo")

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=4)


@st.composite
def scalars(draw, complex_rate=True):
    re = draw(small_fractions)
    im = draw(small_fractions) if complex_rate and draw(st.booleans()) else Fraction(0)
    return Scalar(re, im)
