from fractions import Fraction

from hypothesis import settings, strategies as st

from nrspaces.exact_linalg import Matrix

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small_q = st.fractions(min_value=-6, max_value=6, max_denominator=4)
nonzero_q = small_q.filter(bool)


def matrices(n, m=None, elements=small_q):
    m = n if m is None else m
    return st.lists(st.lists(elements, min_size=m, max_size=m), min_size=n, max_size=n).map(Matrix)


def F(*a):
    return Fraction(*a)
