from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cpdirac.core import ConsistencyError, ParameterError
from cpdirac.weyl import inner, root_system, weyl_dim, weyl_dim_fraction

from oracles import partition_dimension


def _theta_diff(d, j, k):
    v = [0] * d
    v[j - 1], v[k - 1] = 1, -1
    return tuple(v)


def _theta_plus(d, j):
    v = [1] * d
    v[j - 1] += 1
    return tuple(v)


def test_root_system_small():
    rs = root_system(1)
    assert rs.positive_roots == ((2,),)
    assert rs.delta_plus == (1,)
    rs = root_system(2)
    assert set(rs.positive_roots) == {(1, -1), (2, 1), (1, 2)}
    assert rs.delta_plus == (2, 1)
    assert len(root_system(3).positive_roots) == 6


@pytest.mark.parametrize("d", range(1, 10))
def test_root_count_and_delta(d):
    rs = root_system(d)
    assert len(rs.positive_roots) == d * (d + 1) // 2
    assert rs.delta_plus == tuple(range(d, 0, -1))
    # delta_plus is the half-sum of the positive roots
    half = tuple(Fraction(sum(col), 2) for col in zip(*rs.positive_roots))
    assert half == rs.delta_plus


def test_root_system_rejects_bad_rank():
    with pytest.raises(ParameterError):
        root_system(0)


def test_inner_examples():
    delta = (3, 2, 1)
    assert inner(3, delta, (1, -1, 0)) == 2
    assert inner(3, delta, (1, 2, 1)) == 4
    assert inner(4, (0, 0, 0, 0), (5, 1, 2, 3)) == 0
    with pytest.raises(ParameterError):
        inner(3, (1, 2), (1, 2, 3))


def test_inner_matches_beta_matrix():
    d = 4
    beta = [[Fraction(2, d + 1) * (-1 + (d + 1) * (j == k)) for k in range(d)] for j in range(d)]
    u, v = (1, -2, 0, 3), (2, 2, -1, 5)
    expected = sum(u[j] * beta[j][k] * v[k] for j in range(d) for k in range(d))
    assert inner(d, u, v) == expected


@pytest.mark.parametrize("d", range(1, 10))
def test_delta_pairings(d):
    delta = root_system(d).delta_plus
    for j in range(1, d + 1):
        for k in range(j + 1, d + 1):
            assert inner(d, delta, _theta_diff(d, j, k)) == 2 * (k - j)
        assert inner(d, delta, _theta_plus(d, j)) == 2 * (d - j + 1)


@given(st.integers(1, 6).flatmap(
    lambda d: st.tuples(
        st.just(d),
        st.lists(st.integers(-20, 20), min_size=d, max_size=d),
        st.lists(st.integers(-20, 20), min_size=d, max_size=d),
        st.lists(st.integers(-20, 20), min_size=d, max_size=d),
        st.integers(-5, 5),
    )
))
def test_inner_symmetric_bilinear(args):
    d, u, v, w, c = args
    assert inner(d, u, v) == inner(d, v, u)
    uw = [a + c * b for a, b in zip(u, w)]
    assert inner(d, uw, v) == inner(d, u, v) + c * inner(d, w, v)


def test_weyl_dim_examples():
    assert weyl_dim(1, (0,)) == 1
    assert weyl_dim(1, (3,)) == 4
    assert weyl_dim(3, (2, 0, 0)) == 10


@pytest.mark.parametrize("d", range(1, 10))
def test_weyl_dim_trivial(d):
    assert weyl_dim(d, (0,) * d) == 1


@given(st.integers(1, 6).flatmap(
    lambda d: st.lists(st.integers(0, 6), min_size=d, max_size=d)
))
def test_weyl_dim_matches_partition_formula(steps):
    # dominant weights: nonincreasing nonnegative theta-coordinates
    coords = [sum(steps[i:]) for i in range(len(steps))]
    d = len(coords)
    assert weyl_dim(d, coords) == partition_dimension(coords)


def test_weyl_dim_rejects_inadmissible():
    # (-1,) is not dominant for SU(2): product 0
    with pytest.raises(ConsistencyError):
        weyl_dim(1, (-1,))
    assert weyl_dim_fraction(1, (-1,)) == 0
    with pytest.raises(ParameterError):
        weyl_dim(2, (1,))
