from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def rationals(max_num=40, max_den=12):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def is_reduced(q: Fraction) -> bool:
    from math import gcd

    return q.denominator > 0 and gcd(abs(q.numerator), q.denominator) == 1
