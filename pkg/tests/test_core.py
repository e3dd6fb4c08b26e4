from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import citation_vectors, nonempty_citation_vectors
from recindex.core import (
    BALANCED,
    EMPTY,
    INFLUENTIAL,
    PROLIFIC,
    TOLERANCE,
    add_citation_at,
    add_one_to_all,
    aux_indices,
    chi_index,
    citation_count,
    conjugate,
    dominates,
    h_index,
    is_uniform,
    is_valid_vector,
    make_vector,
    max_uniform_dominated,
    rec,
    rec_index,
    RecVariants,
    rec_variants,
    scale,
    valid_positions,
)

# Three extreme profiles with the same total: one blockbuster paper, a
# balanced 10x10 record, and one hundred singly-cited papers.
SINGLE = (100,)
SQUARE = (10,) * 10
FLAT = (1,) * 100

STAIRCASE = (6, 4, 3, 1)


# ---------------------------------------------------------------------------
# construction and validation
# ---------------------------------------------------------------------------


def test_make_vector_sorts_and_drops_zeros():
    assert make_vector([1, 3, 0, 6, 4, 0]) == (6, 4, 3, 1)
    assert make_vector([]) == ()
    assert make_vector([0, 0]) == ()


def test_make_vector_rejects_negatives_by_position():
    with pytest.raises(ValueError, match="position 2"):
        make_vector([3, 1, -2])


def test_make_vector_rejects_non_integers():
    with pytest.raises(ValueError, match="not an integer"):
        make_vector([1, 2.5])  # type: ignore[list-item]


def test_is_valid_vector():
    assert is_valid_vector(())
    assert is_valid_vector((6, 4, 3, 1))
    assert not is_valid_vector((1, 2))
    assert not is_valid_vector((3, 0))
    assert not is_valid_vector([3, 1])


@given(st.lists(st.integers(0, 50), max_size=10))
def test_make_vector_output_is_valid(raw):
    assert is_valid_vector(make_vector(raw))


def test_is_uniform():
    assert is_uniform(())
    assert is_uniform((4, 4, 4))
    assert not is_uniform((4, 3))


# ---------------------------------------------------------------------------
# rec / chi / h
# ---------------------------------------------------------------------------


def test_rec_staircase():
    analysis = rec_index(STAIRCASE)
    assert analysis.value == 9
    assert analysis.maximizers == (3,)
    assert analysis.width == 3 and analysis.height == 3
    assert analysis.classification == BALANCED


def test_rec_extreme_profiles():
    assert rec_index(SINGLE).classification == INFLUENTIAL
    assert rec_index(SQUARE).classification == BALANCED
    assert rec_index(FLAT).classification == PROLIFIC
    assert rec(SINGLE) == rec(SQUARE) == rec(FLAT) == 100


def test_rec_empty():
    analysis = rec_index(())
    assert analysis.value == 0
    assert analysis.maximizers == ()
    assert analysis.width is None
    assert analysis.classification == EMPTY


def test_rec_tie_uses_smallest_width():
    # areas of <4,2,1>: 4, 4, 3 -> widths 1 and 2 tie
    analysis = rec_index((4, 2, 1))
    assert analysis.maximizers == (1, 2)
    assert analysis.width == 1
    assert analysis.classification == INFLUENTIAL


def test_chi_equal_for_extreme_profiles():
    for x in (SINGLE, SQUARE, FLAT):
        assert abs(chi_index(x) - 10.0) <= TOLERANCE


def test_h_extreme_profiles():
    assert h_index(SINGLE) == 1
    assert h_index(SQUARE) == 10
    assert h_index(FLAT) == 1
    assert h_index(STAIRCASE) == 3
    assert h_index(()) == 0


@given(citation_vectors())
def test_chi_squares_back_to_rec(x):
    assert abs(chi_index(x) ** 2 - rec(x)) <= 1e-6


@given(citation_vectors())
def test_sandwich_bounds(x):
    h = h_index(x)
    r = rec(x)
    assert h * h <= r <= citation_count(x)
    if x:
        assert r <= len(x) * x[0]


# ---------------------------------------------------------------------------
# companion indices
# ---------------------------------------------------------------------------


def test_aux_staircase():
    aux = aux_indices(STAIRCASE)
    assert aux.publication_count == 4
    assert aux.max_citation == 6
    assert abs(aux.euclidean - math.sqrt(62)) <= TOLERANCE
    assert aux.g_index == 3
    assert aux.w_index == 4


def test_aux_empty_is_all_zero():
    aux = aux_indices(())
    assert aux == type(aux)(0, 0, 0.0, 0, 0)


def test_aux_square():
    aux = aux_indices(SQUARE)
    assert aux.g_index == 10
    assert aux.w_index == 10
    assert abs(aux.euclidean - math.sqrt(1000)) <= TOLERANCE


@given(nonempty_citation_vectors())
def test_g_index_against_direct_scan(x):
    best = 0
    for g in range(1, len(x) + 1):
        if sum(x[:g]) >= g * g:
            best = g
    assert aux_indices(x).g_index == best


@given(nonempty_citation_vectors())
def test_w_index_against_direct_scan(x):
    best = 0
    for w in range(1, len(x) + 1):
        if all(x[i - 1] >= w - i + 1 for i in range(1, w + 1)):
            best = w
    assert aux_indices(x).w_index == best


# ---------------------------------------------------------------------------
# conjugation
# ---------------------------------------------------------------------------


def test_conjugate_known_pair():
    assert conjugate(STAIRCASE) == (4, 3, 3, 2, 1, 1)
    assert conjugate((4, 3, 3, 2, 1, 1)) == STAIRCASE
    assert conjugate(()) == ()


@given(citation_vectors())
def test_conjugate_involution(x):
    assert conjugate(conjugate(x)) == x


@given(nonempty_citation_vectors())
def test_conjugate_swaps_count_and_max(x):
    p = conjugate(x)
    assert len(p) == x[0]
    assert p[0] == len(x)


@given(citation_vectors())
def test_conjugate_preserves_rec_h_and_total(x):
    p = conjugate(x)
    assert rec(p) == rec(x)
    assert h_index(p) == h_index(x)
    assert citation_count(p) == citation_count(x)


def test_rec_variants_examples():
    assert rec_variants(STAIRCASE) == RecVariants(influence=9, prolificity=9)
    assert rec_variants(SINGLE) == RecVariants(influence=100, prolificity=1)
    assert rec_variants(()) == RecVariants(influence=0, prolificity=0)


@given(citation_vectors())
def test_rec_variants_recombine(x):
    variants = rec_variants(x)
    assert max(variants.influence, variants.prolificity) == rec(x)


# ---------------------------------------------------------------------------
# order and growth
# ---------------------------------------------------------------------------


def test_dominates():
    assert dominates((), (1,))
    assert dominates((3, 1), (6, 4, 3, 1))
    assert dominates(STAIRCASE, STAIRCASE)
    assert not dominates((1, 1), (3,))
    assert not dominates((7,), (6, 4))


def test_scale():
    assert scale(STAIRCASE, 2) == (12, 8, 6, 2)
    assert scale((), 5) == ()
    with pytest.raises(ValueError):
        scale(STAIRCASE, 0)
    with pytest.raises(ValueError):
        scale(STAIRCASE, -1)


@given(citation_vectors(max_cite=9), st.integers(1, 5))
def test_rec_scales_linearly(x, factor):
    assert rec(scale(x, factor)) == factor * rec(x)


def test_valid_positions():
    assert valid_positions(STAIRCASE) == [1, 2, 3, 4, 5]
    assert valid_positions((6, 4, 4, 1)) == [1, 2, 4, 5]
    assert valid_positions(()) == [1]


def test_add_citation_known_jumps():
    assert add_citation_at(STAIRCASE, 3) == (6, 4, 4, 1)
    assert rec(add_citation_at(STAIRCASE, 3)) == 12
    assert add_citation_at(STAIRCASE, 4) == (6, 4, 3, 2)
    assert rec(add_citation_at(STAIRCASE, 4)) == 9
    assert add_citation_at(STAIRCASE, 5) == (6, 4, 3, 1, 1)
    assert add_citation_at((), 1) == (1,)


def test_add_citation_rejects_mid_run():
    with pytest.raises(ValueError, match="position 2"):
        add_citation_at((6, 4, 4, 1), 3)
    with pytest.raises(ValueError, match="out of range"):
        add_citation_at(STAIRCASE, 6)
    with pytest.raises(ValueError, match="out of range"):
        add_citation_at(STAIRCASE, 0)


@given(citation_vectors(), st.data())
def test_single_citation_rec_recurrence(x, data):
    positions = valid_positions(x)
    k = data.draw(st.sampled_from(positions))
    grown = add_citation_at(x, k)
    old = x[k - 1] if k <= len(x) else 0
    assert rec(grown) == max(rec(x), k * (old + 1))


@given(citation_vectors(), st.data())
def test_single_citation_chi_step_bound(x, data):
    k = data.draw(st.sampled_from(valid_positions(x)))
    assert chi_index(add_citation_at(x, k)) <= chi_index(x) + 1 + TOLERANCE


def test_add_one_to_all():
    assert add_one_to_all((1, 1)) == (2, 2)
    assert add_one_to_all(()) == ()
    assert rec((2, 2)) > rec((1, 1))


@given(nonempty_citation_vectors())
def test_blanket_citation_strictly_raises_rec(x):
    assert rec(add_one_to_all(x)) > rec(x)


def test_max_uniform_dominated():
    assert max_uniform_dominated(STAIRCASE) == (3, 3, 3)
    assert max_uniform_dominated(SQUARE) == SQUARE
    assert max_uniform_dominated(()) == ()


@given(citation_vectors())
def test_max_uniform_dominated_properties(x):
    u = max_uniform_dominated(x)
    assert is_uniform(u)
    assert dominates(u, x)
    assert citation_count(u) == rec(x)
