from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from hopfcomb.exceptions import HopfCombError, ResourceLimitError, UnknownAlgebraError, ValidationError
from hopfcomb.hopf_algebras.stalactic import (
    InitialWordClasses,
    ParkingClasses,
    brute_force_count,
    brute_force_triangle_row,
    c_coefficient,
    c_coefficients,
    c_integral,
    canonical_form,
    class_count,
    closure_check,
    congruent,
    egf_coefficients,
    endofunction_class_count_by_characters,
    format_tableau,
    generic_character,
    generic_character_from_derangements,
    insert,
    p_symbol_word,
    q_fiber,
    q_fiber_check,
    parking_class_count_by_characters,
    rewriting_class,
    stalactic_class_product,
    triangle,
    triangle_rows,
    well_definedness_check,
)

WORD = tuple("cabccdbdd")

def test_canonical_form():
    assert "".join(canonical_form(WORD)) == "cccabbddd"
    assert canonical_form(()) == ()
    assert congruent(tuple("abab"), tuple("aabb"))
    assert not congruent(tuple("ab"), tuple("ba"))

def test_insert():
    P, Q = insert(WORD)
    assert P == (("c", 3), ("a", 1), ("b", 2), ("d", 3))
    assert Q == ((1, 4, 5), (2,), (3, 7), (6, 8, 9))
    assert "".join(p_symbol_word(P)) == "cccabbddd"
    assert insert(()) == ((), ())

def test_format_tableau():
    P, _ = insert((3, 1, 2, 3, 3, 4, 2, 4, 4))
    assert format_tableau(P, alphabetic=True) == "c a b d\nc . b d\nc . . d"

@given(st.lists(st.integers(min_value=1, max_value=3), max_size=5))
@settings(max_examples=50, deadline=None)
def test_rewriting_preserves_the_canonical_form(w):
    w = tuple(w)
    assert all(canonical_form(v) == canonical_form(w) for v in rewriting_class(w))

@pytest.mark.parametrize("n, letters", [(3, 3), (4, 3), (5, 2)])
def test_rewriting_classes_are_the_fibers(n, letters):
    assert closure_check(n, letters)

def test_q_fibers_are_wsym_orbit_sums():
    assert q_fiber(((1, 3), (2,)), 2) == Counter({(1, 2, 1): 1, (2, 1, 2): 1})
    assert len(q_fiber(((1,), (2,), (3,)), 3)) == 6
    assert q_fiber(((1,), (2,)), 1) == Counter()
    assert q_fiber_check(4) == (True, None)

@pytest.mark.parametrize("family, expected", [
    ("parking", [1, 3, 13, 73, 501, 4051]),
    ("endofunctions", [1, 4, 21, 136, 1045, 9276]),
    ("initial-words", [1, 3, 11, 49, 261, 1631]),
])
def test_class_counts(family, expected):
    assert [class_count(family, n) for n in range(1, 7)] == expected
    assert [brute_force_count(family, n) for n in range(1, 5)] == expected[:4]
    assert egf_coefficients(family.replace("-", "_"), 6) == expected

def test_class_counts_by_characters():
    assert [parking_class_count_by_characters(n) for n in range(1, 7)] == [1, 3, 13, 73, 501, 4051]
    assert [endofunction_class_count_by_characters(n) for n in range(1, 7)] == [1, 4, 21, 136, 1045, 9276]

def test_class_count_guards():
    with pytest.raises(ValidationError):
        class_count("parking", 0)
    with pytest.raises(ResourceLimitError):
        class_count("parking", 10)
    with pytest.raises(UnknownAlgebraError):
        class_count("trees", 3)

@pytest.mark.parametrize("name, n, expected", [
    ("lah", 4, [1, 12, 36, 24]),
    ("endt", 5, [5, 80, 360, 480, 120]),
    ("arr", 3, [1, 4, 6]),
    ("narayana", 4, [1, 6, 6, 1]),
    ("tw", 3, [3, 6, 1]),
    ("pascal", 4, [1, 3, 3, 1]),
])
def test_triangles(name, n, expected):
    assert triangle(name, n) == expected

@pytest.mark.parametrize("name", ["lah", "endt", "arr", "narayana", "tw", "pascal"])
def test_triangles_by_enumeration(name):
    for n in range(1, 5):
        assert brute_force_triangle_row(name, n) == triangle(name, n)

def test_triangle_rows():
    assert triangle_rows("lah", 3) == [[1], [1, 2], [1, 6, 6]]
    with pytest.raises(ValidationError):
        triangle("lah", 0)
    with pytest.raises(UnknownAlgebraError):
        triangle("stirling", 3)

def test_c_coefficients():
    assert [c_coefficient(k) for k in range(6)] == [1, 1, 3, 11, 53, 309]
    assert egf_coefficients("c", 6) == [1, 1, 3, 11, 53, 309]
    assert [c_integral(k) for k in range(4)] == [1, 1, 3, 11]

@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_generic_character_lives_on_hooks(n):
    assert c_coefficients(n) == [c_coefficient(k) for k in range(n)]
    assert generic_character_from_derangements(n) == generic_character(n)

def test_class_products():
    assert stalactic_class_product("parking", (1,), (1, 1)).terms == {(1, 2, 2): 1}
    assert stalactic_class_product("parking", (1, 2, 1), (1,)).terms == {(1, 1, 2, 4): 1}
    init = InitialWordClasses()
    assert init.product_on_basis((1, 1), (1, 2)).terms == {(1, 1, 2, 3): 1}

@pytest.mark.parametrize("family", ["parking", "endofunctions", "initial-words"])
def test_class_products_are_well_defined(family):
    ok, witness = well_definedness_check(family, 3)
    assert ok, witness

def test_class_algebras_have_no_coproduct():
    with pytest.raises(HopfCombError):
        ParkingClasses().coproduct_on_basis((1,))
