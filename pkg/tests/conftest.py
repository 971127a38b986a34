"""Shared strategies for property tests.

Distributions are built by normalizing non-negative weights, so every
generated value is a valid simplex point by construction (the library
itself never normalizes).
"""

import math

import hypothesis.strategies as st

from pdnegate import Involutive, Linear, Tsallis, Uniform, Yager, make_dist

ALPHA_GRID = [i / 10 for i in range(11)]


@st.composite
def dists(draw, min_n=2, max_n=8, min_weight=0.0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    weights = draw(
        st.lists(
            st.floats(min_value=min_weight, max_value=1.0, allow_nan=False),
            min_size=n,
            max_size=n,
        ).filter(lambda w: math.fsum(w) > 1e-6)
    )
    total = math.fsum(weights)
    return make_dist([w / total for w in weights])


def positive_dists(min_n=2, max_n=8):
    # Strictly positive entries: safe for tsallis with k < 0.
    return dists(min_n=min_n, max_n=max_n, min_weight=1e-3)


def pointwise_specs():
    return st.one_of(
        st.just(Yager()),
        st.just(Uniform()),
        st.sampled_from(ALPHA_GRID).map(Linear),
    )


def all_specs(include_negative_k=False):
    ks = [0.5, 1.0, 2.0, 3.0]
    if include_negative_k:
        ks += [-0.5, -1.0, -2.0]
    return st.one_of(
        pointwise_specs(),
        st.sampled_from(ks).map(Tsallis),
        st.just(Involutive()),
    )
