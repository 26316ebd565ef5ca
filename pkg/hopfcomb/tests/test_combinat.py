import pytest
from hypothesis import given, strategies as st
from sympy.combinatorics import Permutation

from hopfcomb.exceptions import ResourceLimitError, UnknownAlgebraError, ValidationError
from hopfcomb.hopf_algebras.combinat import (
    canonical_set_partition,
    compositions,
    connected_factorization,
    count_objects,
    csupp,
    cycle_decomposition,
    cycle_type,
    descent_composition,
    enumerate_objects,
    format_word,
    from_cycles,
    integer_partitions,
    inversions,
    invert_series,
    is_permutation,
    ordered_cycle_type,
    parse_composition,
    parse_set_partition,
    parse_word,
    partial_matchings,
    shifted_concat,
    shifted_shuffle,
    shuffle,
    standardize,
)
from hopfcomb.utils import entries

words = st.lists(st.integers(min_value=1, max_value=5), max_size=7).map(tuple)
permutations = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)

@pytest.mark.parametrize("word, expected", [
    ((1, 1, 2, 1, 2, 1, 3, 1, 3, 2), (1, 2, 6, 3, 7, 4, 9, 5, 10, 8)),
    ((1, 2, 3), (1, 2, 3)),
    ((3, 2, 1), (3, 2, 1)),
    ((), ()),
])
def test_standardize(word, expected):
    assert standardize(word) == expected

@given(words)
def test_standardize_is_a_permutation_with_the_same_inversions(w):
    s = standardize(w)
    assert is_permutation(s)
    assert inversions(s) == inversions(w)

@pytest.mark.parametrize("f, g, expected", [
    ((1, 2), (2, 1), (1, 2, 4, 3)),
    ((4, 2, 3, 2, 2), (2, 2), (4, 2, 3, 2, 2, 7, 7)),
    ((1,), (3, 3, 1), (1, 4, 4, 2)),
])
def test_shifted_concat(f, g, expected):
    assert shifted_concat(f, g) == expected

@pytest.mark.parametrize("h, expected", [
    ((4, 2, 3, 2, 2, 7, 7), [(4, 2, 3, 2, 2), (2, 2)]),
    ((6, 2, 6, 1, 2, 4), [(6, 2, 6, 1, 2, 4)]),
    ((1, 2, 4, 3), [(1,), (1,), (2, 1)]),
])
def test_connected_factorization(h, expected):
    assert connected_factorization(h) == expected

@given(st.lists(permutations, min_size=1, max_size=3))
def test_connected_factors_concatenate_back(perms):
    h = ()
    for p in perms:
        h = shifted_concat(h, p)
    rebuilt = ()
    for factor in connected_factorization(h):
        rebuilt = shifted_concat(rebuilt, factor)
    assert rebuilt == h

def test_cycles():
    assert cycle_decomposition((3, 1, 5, 4, 2)) == ((1, 3, 5, 2), (4,))
    assert cycle_decomposition((2, 4, 3, 1)) == ((1, 2, 4), (3,))
    assert cycle_decomposition((1, 2, 3)) == ((1,), (2,), (3,))
    assert from_cycles([(3, 5, 2, 1), (4,)]) == (3, 1, 5, 4, 2)

@given(permutations)
def test_cycles_agree_with_sympy(sigma):
    expected = sorted(tuple(x + 1 for x in c) for c in Permutation([x - 1 for x in sigma]).cyclic_form)
    ours = sorted(c for c in cycle_decomposition(sigma) if len(c) > 1)
    assert ours == expected
    assert from_cycles(cycle_decomposition(sigma)) == sigma

def test_csupp_and_types():
    assert csupp((5, 2, 3, 4, 1)) == ((1, 5), (2,), (3,), (4,))
    assert ordered_cycle_type((5, 2, 3, 4, 1)) == (2, 1, 1, 1)
    assert csupp((3, 1, 5, 4, 2)) == ((1, 2, 3, 5), (4,))
    assert ordered_cycle_type((3, 1, 5, 4, 2)) == (4, 1)
    assert cycle_type((1, 2, 3, 4)) == (1, 1, 1, 1)

def test_shuffles():
    assert sorted(shuffle((1,), (2,))) == [(1, 2), (2, 1)]
    assert set(shifted_shuffle((2, 1), (1,))) == {(2, 1, 3), (2, 3, 1), (3, 2, 1)}
    assert len(shuffle((1, 1), (1,))) == 3

def test_descents_and_inversions():
    assert descent_composition((2, 1, 3)) == (1, 2)
    assert descent_composition((3, 2, 1)) == (1, 1, 1)
    assert descent_composition(()) == ()
    assert inversions((3, 2, 1)) == 3

@pytest.mark.parametrize("kind, n, expected", [
    ("endofunctions", 2, 4),
    ("permutations", 4, 24),
    ("parking", 3, 16),
    ("nondecreasing-parking", 3, 5),
    ("set-partitions", 4, 15),
    ("initial-words", 3, 13),
    ("involutions", 4, 10),
])
def test_enumeration_counts(kind, n, expected):
    assert count_objects(kind, n) == expected

def test_enumeration_lists_endofunctions():
    assert list(enumerate_objects("endofunctions", 2)) == [(1, 1), (1, 2), (2, 1), (2, 2)]

def test_enumeration_guards():
    with pytest.raises(ResourceLimitError):
        enumerate_objects("permutations", 5, limit=3)
    with pytest.raises(UnknownAlgebraError):
        enumerate_objects("trees", 3)

def test_partitions_and_compositions():
    assert integer_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert sorted(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert list(compositions(0)) == [()]

def test_partial_matchings_of_two_pairs():
    assert len(list(partial_matchings(["a", "b"], ["c", "d"]))) == 7

def test_text_encodings():
    assert parse_word("cab") == (3, 1, 2)
    assert parse_word("[1,10,2]") == (1, 10, 2)
    assert format_word((1, 10, 2)) == "[1,10,2]"
    assert format_word((1, 3, 3)) == "133"
    assert parse_set_partition("{1,5|2|3,4}") == ((1, 5), (2,), (3, 4))
    assert parse_composition("(2,1,1)") == (2, 1, 1)
    with pytest.raises(ValidationError):
        parse_word("102")
    with pytest.raises(ValidationError):
        canonical_set_partition([(1, 2), (2, 3)])

def test_series_inversion():
    assert invert_series([1, -1], 5) == [1, 1, 1, 1, 1]

def test_entries_of_nested_cycles():
    matching = [((1, 3), (4,)), ((2,), (5, 6))]
    assert list(entries(matching)) == [1, 3, 4, 2, 5, 6]
    assert list(entries([["a", "b"], ("cd",)])) == ["a", "b", "cd"]
    assert list(entries(())) == []
