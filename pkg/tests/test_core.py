import pytest
from hypothesis import given, strategies as st

from atomfiber.core import (as_matrix, as_vector, canonical_sort, conforms,
                            conforms_prefix, l1_norm, sign_masks, sub)
from atomfiber.errors import DimensionError

ints = st.integers(-4, 4)


def vecs(n):
    return st.lists(ints, min_size=n, max_size=n).map(tuple)


@pytest.mark.parametrize("u, v, expected", [
    ((1, -1, 0), (2, -3, 0), True),
    ((1, 1), (2, -1), False),
    ((0, 0, 0, 0), (5, -2, 0, 7), True),
    ((0, 0, 0, 0), (0, 0, 0, 0), True),
    ((2, 0), (1, 0), False),
    ((-1,), (1,), False),
])
def test_conforms_examples(u, v, expected):
    assert conforms(u, v) is expected


@pytest.mark.parametrize("u, v, k, expected", [
    ((1, -1), (2, -3), 1, True),
    ((1, 1), (2, -1), 2, False),
    ((0, 0), (3, -4), 0, True),
    ((0, 0), (3, -4), 2, True),
])
def test_conforms_prefix_examples(u, v, k, expected):
    assert conforms_prefix(u, v, k) is expected


def test_conforms_rejects_mismatched_dimensions():
    with pytest.raises(DimensionError):
        conforms((1, 2), (1, 2, 3))
    with pytest.raises(DimensionError):
        conforms_prefix((1,), (1, 2), 1)


@pytest.mark.parametrize("v, norm", [((1, -2, 3), 6), ((0, 0, 0), 0), ((0, 1, 0, 1), 2)])
def test_l1_norm(v, norm):
    assert l1_norm(v) == norm


def test_big_integers_stay_exact():
    big = 2**200 + 1
    u = as_vector([big, -big])
    assert sub(u, (1, -1)) == (2**200, -(2**200))
    assert conforms((2**199, 0), u)
    assert l1_norm(u) == 2 * big


def test_as_vector_rejects_floats():
    with pytest.raises(TypeError):
        as_vector([1.0, 2])


def test_as_matrix_rejects_ragged():
    with pytest.raises(DimensionError):
        as_matrix([[1, 2], [3]])


def test_canonical_sort_is_graded_lex():
    assert canonical_sort([(0, 3), (2, 1), (1, 0), (0, 3), (-1, 0)]) == \
        [(-1, 0), (1, 0), (0, 3), (2, 1)]


@given(vecs(4))
def test_reflexive(u):
    assert conforms(u, u)


@given(vecs(3), vecs(3))
def test_antisymmetric(u, v):
    if conforms(u, v) and conforms(v, u):
        assert u == v


@given(vecs(3), vecs(3), vecs(3))
def test_transitive(u, v, w):
    if conforms(u, v) and conforms(v, w):
        assert conforms(u, w)


@given(vecs(5), vecs(5))
def test_l1_difference_of_conforming_pair(u, v):
    if conforms(u, v):
        assert l1_norm(sub(v, u)) == l1_norm(v) - l1_norm(u)


@given(vecs(4), st.data())
def test_bounded_sum_of_conforming_parts(v, data):
    # draw u, w below v; their sum is below v once it fits in magnitude
    u = tuple(data.draw(st.integers(min(0, x), max(0, x))) for x in v)
    w = tuple(data.draw(st.integers(min(0, x), max(0, x))) for x in v)
    assert conforms(u, v) and conforms(w, v)
    s = tuple(a + b for a, b in zip(u, w))
    if all(abs(x) <= abs(y) for x, y in zip(s, v)):
        assert conforms(s, v)


@given(vecs(6), vecs(6))
def test_sign_masks_prefilter_is_necessary(u, v):
    if conforms(u, v):
        up, un = sign_masks(u)
        vp, vn = sign_masks(v)
        assert up & ~vp == 0 and un & ~vn == 0
