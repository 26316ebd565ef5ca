import pytest
from hypothesis import given, strategies as st

from hopfcomb.exceptions import UnknownAlgebraError
from hopfcomb.hopf_algebras.combinat import integer_partitions
from hopfcomb.hopf_algebras.free_module import hopf_check
from hopfcomb.hopf_algebras.symfunc import (
    SymE,
    SymM,
    SymS,
    character,
    convert,
    derangements,
    kostka,
    m_eval_at_n,
    multiply,
    sym,
)

partitions_up_to_4 = st.integers(min_value=1, max_value=4).flatmap(lambda n: st.sampled_from(integer_partitions(n)))

def test_h2_in_monomials():
    assert convert(sym("h", (2,)), "m").terms == {(2,): 1, (1, 1): 1}

def test_e_in_monomials():
    assert convert(sym("e", (2,)), "m").terms == {(1, 1): 1}

@pytest.mark.parametrize("n, k", [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3)])
def test_e_times_h_is_two_hooks(n, k):
    product = multiply(sym("e", (k,)), sym("h", (n - k,)), "s")
    expected = {(n - k,) + (1,) * k: 1, (n - k + 1,) + (1,) * (k - 1): 1}
    assert product.terms == expected

@given(partitions_up_to_4, st.sampled_from(["e", "h", "p", "s"]))
def test_basis_change_round_trip(parts, basis):
    f = sym(basis, parts)
    assert convert(convert(f, "m"), basis) == f

def test_kostka_numbers():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((1, 1, 1), (2, 1)) == 0

def test_characters():
    assert character((2, 1), (1, 1, 1)) == 2
    assert character((2, 1), (3,)) == -1
    assert character((1, 1, 1), (2, 1)) == -1

def test_monomials_at_ones():
    assert m_eval_at_n((1,), 4) == 4
    assert m_eval_at_n((1, 1), 4) == 6
    assert m_eval_at_n((2, 1), 4) == 12
    assert m_eval_at_n((1, 1, 1, 1, 1), 4) == 0

@pytest.mark.parametrize("k, expected", [(0, 1), (1, 0), (2, 1), (3, 2), (4, 9), (5, 44)])
def test_derangements(k, expected):
    assert derangements(k) == expected

def test_products_in_bases():
    assert SymE().product(SymE().monomial((2,)), SymE().monomial((1,))).terms == {(2, 1): 1}
    assert SymM().product(SymM().monomial((1,)), SymM().monomial((1,))).terms == {(2,): 1, (1, 1): 2}
    assert SymS().product(SymS().monomial((1,)), SymS().monomial((1,))).terms == {(2,): 1, (1, 1): 1}

def test_coproduct_of_monomials():
    delta = SymM().coproduct(SymM().monomial((2, 1)))
    assert delta.terms == {((2, 1), ()): 1, ((2,), (1,)): 1, ((1,), (2,)): 1, ((), (2, 1)): 1}

@pytest.mark.parametrize("algebra", [SymM(), SymE(), SymS()])
def test_bialgebra_axioms(algebra):
    report = hopf_check(algebra, 3)
    assert report["passed"]
    assert report["commutative"] and report["cocommutative"]

@pytest.mark.slow
@pytest.mark.parametrize("algebra", [SymM(), SymE(), SymS()])
def test_bialgebra_axioms_up_to_degree_five(algebra):
    assert hopf_check(algebra, 5)["passed"]

def test_unknown_basis():
    with pytest.raises(UnknownAlgebraError):
        sym("x", (1,))
