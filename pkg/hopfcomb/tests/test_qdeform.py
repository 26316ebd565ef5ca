import pytest

from hopfcomb.exceptions import ResourceLimitError, UnknownAlgebraError, VerificationError
from hopfcomb.hopf_algebras import qdeform
from hopfcomb.hopf_algebras.combinat import enumerate_objects
from hopfcomb.hopf_algebras.free_module import LinComb, hopf_check, q
from hopfcomb.hopf_algebras.qdeform import (
    FQSymQ,
    FQSymQ0,
    NCSFQ,
    QSymQ,
    M_to_fundamental,
    change_basis,
    class_census,
    cocommutativity_check,
    confluence_check,
    coproduct_q_F,
    coproduct_q_M,
    coproduct_q_S,
    expected_class_count,
    fundamental_to_M,
    hypoplactic_class_count,
    hypoplactic_confluence_check,
    ordinary_coproduct_F,
    phi_morphism_check,
    q0_coproduct,
    q_quasi_shuffle,
    q_rewrite,
    qsym_oracle_check,
    rewrites,
    sylvester_class_count,
    sylvester_confluence_check,
    twisted_morphism_check,
)

@pytest.mark.parametrize("sigma, expected", [
    ((2, 4, 3, 1), {((), (2, 4, 3, 1)): 1, ((1,), (3, 2, 1)): q, ((1, 2), (2, 1)): q ** 3,
                    ((1, 3, 2), (1,)): q ** 3, ((2, 4, 3, 1), ()): 1}),
    ((3, 4, 2, 1), {((), (3, 4, 2, 1)): 1, ((1,), (3, 2, 1)): q ** 2, ((1, 2), (2, 1)): q ** 4,
                    ((2, 3, 1), (1,)): q ** 3, ((3, 4, 2, 1), ()): 1}),
    ((2, 1), {((), (2, 1)): 1, ((1,), (1,)): q, ((2, 1), ()): 1}),
    ((2, 1, 3), {((), (2, 1, 3)): 1, ((1,), (1, 2)): q, ((2, 1), (1,)): 1, ((2, 1, 3), ()): 1}),
    ((2, 3, 1), {((), (2, 3, 1)): 1, ((1,), (2, 1)): q, ((1, 2), (1,)): q ** 2, ((2, 3, 1), ()): 1}),
    ((3, 2, 1), {((), (3, 2, 1)): 1, ((1,), (2, 1)): q ** 2, ((2, 1), (1,)): q ** 2, ((3, 2, 1), ()): 1}),
])
def test_twisted_coproduct(sigma, expected):
    assert coproduct_q_F(sigma).terms == expected

@pytest.mark.parametrize("sigma", list(enumerate_objects("permutations", 4)))
def test_coproduct_at_q_one_is_deconcatenation(sigma):
    assert coproduct_q_F(sigma).specialize(1) == ordinary_coproduct_F(sigma)

@pytest.mark.parametrize("algebra", [FQSymQ(), QSymQ(), NCSFQ()])
def test_coproducts_are_twisted_morphisms(algebra):
    ok, witness = twisted_morphism_check(algebra, 4)
    assert ok, witness

@pytest.mark.slow
@pytest.mark.parametrize("algebra", [FQSymQ(), QSymQ(), NCSFQ()])
def test_coproducts_are_twisted_morphisms_up_to_degree_five(algebra):
    ok, witness = twisted_morphism_check(algebra, 5)
    assert ok, witness

def test_ncsf_coproduct():
    assert coproduct_q_S((2,)).terms == {((2,), ()): 1, ((1,), (1,)): q, ((), (2,)): 1}
    delta = coproduct_q_S((1, 1))
    assert delta[((1,), (1,))] == 1 + q
    assert delta[((1, 1), ())] == 1

def test_qsym_coproduct_is_deconcatenation():
    assert coproduct_q_M((2, 1)).terms == {((2, 1), ()): 1, ((2,), (1,)): 1, ((), (2, 1)): 1}

def test_q_quasi_shuffle():
    assert q_quasi_shuffle((1,), (1,)) == {(2,): 1, (1, 1): 1 + q}
    terms = q_quasi_shuffle((1,), (2,))
    assert terms == {(1, 2): 1, (2, 1): q ** 2, (3,): 1}

@pytest.mark.parametrize("first, second", [
    ((1,), (1,)),
    ((1,), (2,)),
    ((2,), (1,)),
    ((1, 1), (1,)),
    ((2, 1), (1,)),
])
def test_qsym_realization(first, second):
    assert qsym_oracle_check(first, second)

def test_fundamental_basis():
    x = LinComb({(2, 1): 1}, "F", "composition")
    assert fundamental_to_M(x).terms == {(2, 1): 1, (1, 1, 1): 1}
    assert M_to_fundamental(fundamental_to_M(x)) == x

def test_phi():
    image = change_basis(FQSymQ().monomial((2, 3, 1)), "F")
    assert image.terms == {(2, 1): q ** 2}
    ok, witness = phi_morphism_check(3)
    assert ok, witness

@pytest.mark.slow
def test_phi_up_to_degree_five():
    ok, witness = phi_morphism_check(5)
    assert ok, witness

def test_q_zero_coproduct():
    assert q0_coproduct((2, 1)).terms == {((2, 1), ()): 1, ((), (2, 1)): 1}
    assert q0_coproduct((1, 2)).terms == {((1, 2), ()): 1, ((1,), (1,)): 2, ((), (1, 2)): 1}
    ok, witness = cocommutativity_check(4)
    assert ok, witness

def test_bialgebra_axioms():
    report = hopf_check(FQSymQ0(), 3)
    assert report["passed"]
    assert report["cocommutative"]
    for algebra in (FQSymQ(), QSymQ(), NCSFQ()):
        assert hopf_check(algebra, 3)["passed"]

@pytest.mark.slow
@pytest.mark.parametrize("algebra", [FQSymQ0(), FQSymQ(), QSymQ(), NCSFQ()])
def test_bialgebra_axioms_up_to_degree_five(algebra):
    assert hopf_check(algebra, 5)["passed"]

@pytest.mark.parametrize("w, system, expected", [
    ((2, 3, 1), "qH", ((2, 1, 3), 1)),
    ((2, 3, 1), "qS", ((2, 3, 1), 0)),
    ((3, 1, 2), "qS", ((1, 3, 2), 1)),
    ((1, 1, 1), "qH", ((1, 1, 1), 0)),
    ((), "qS", ((), 0)),
])
def test_q_rewrite(w, system, expected):
    assert q_rewrite(w, system) == expected

def test_rewrites():
    assert rewrites((3, 1, 2), "qS") == [(1, 3, 2)]
    assert rewrites((2, 1, 3), "qH") == []
    with pytest.raises(UnknownAlgebraError):
        rewrites((2, 1), "qX")

def test_q_rewrite_guard():
    with pytest.raises(ResourceLimitError):
        q_rewrite(tuple(range(12, 0, -1)), "qS")

def test_q_rewrite_needs_a_single_normal_form(monkeypatch):
    monkeypatch.setattr(qdeform, "irreducible_forms", lambda w, system: frozenset([(1, 2, 3), (2, 1, 3)]))
    with pytest.raises(VerificationError) as excinfo:
        q_rewrite((2, 3, 1), "qH")
    assert excinfo.value.report["forms"] == [(1, 2, 3), (2, 1, 3)]
    assert "not confluent" in str(excinfo.value)

@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_class_census(n):
    assert sylvester_class_count(n) == expected_class_count("qS", n) == [1, 2, 5, 14, 42][n - 1]
    assert hypoplactic_class_count(n) == expected_class_count("qH", n) == 2 ** (n - 1)

def test_census_report():
    assert class_census("qS", 3) == {"system": "qS", "n": 3, "words": 6, "classes": 5,
                                     "largest_class": 2, "confluent": True}

def test_confluence():
    assert sylvester_confluence_check(4)[0]
    assert hypoplactic_confluence_check(4)[0]
    assert confluence_check(3, letters=2, system="qS")[0]

@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6, 7])
def test_confluence_up_to_length_seven(n):
    assert confluence_check(n, letters=4, system="qS") == (True, None)
    assert sylvester_confluence_check(n) == (True, None)
    assert hypoplactic_confluence_check(n) == (True, None)
