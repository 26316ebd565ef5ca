import pytest
from hypothesis import given, strategies as st

from hopfcomb.config import check_degree, get_conf, set_limit
from hopfcomb.exceptions import ConfigurationError, ResourceLimitError, ValidationError, VerificationError
from hopfcomb.hopf_algebras.eqsym import EQSym
from hopfcomb.hopf_algebras.free_module import (
    LinComb,
    QRing,
    as_integer,
    collect,
    format_coefficient,
    format_report,
    hopf_check,
    pairing,
    q,
    specialize,
    swap,
    tensor,
    tensor_product,
    twisted_tensor_product,
)
from hopfcomb.hopf_algebras.qdeform import FQSymQ
from hopfcomb.hopf_algebras.phisym import PhiSym

polys = st.lists(st.integers(min_value=-3, max_value=3), max_size=4).map(
    lambda cs: sum((c * q ** k for k, c in enumerate(cs)), QRing.zero))
small_endofunctions = st.integers(min_value=1, max_value=2).flatmap(
    lambda n: st.lists(st.integers(min_value=1, max_value=n), min_size=n, max_size=n)).map(tuple)

@given(polys, polys, polys)
def test_coefficient_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a

def test_coefficient_formatting():
    assert format_coefficient(QRing.one + q) == "q+1"
    assert format_coefficient(q ** 3) == "q^3"
    assert format_coefficient(2 * q ** 2 - 1) == "2*q^2-1"
    assert as_integer(QRing.one * 4) == 4
    assert as_integer(q) is None
    assert specialize(QRing.one + q, 1) == 2

def test_linear_combinations():
    x = LinComb({(1,): 2, (2, 1): 1})
    y = LinComb({(1,): -2})
    assert (x + y).terms == {(2, 1): 1}
    assert x - x == 0
    assert str(x) == "2*M[1] + M[21]"
    assert str(LinComb()) == "0"
    assert x[(1,)] == 2 and x[(3,)] == 0
    with pytest.raises(ValidationError):
        x + LinComb({(1,): 1}, "S")

def test_q_coefficients_print_symbolically():
    x = LinComb({(1, 1): QRing.one + q, (2,): q}, "M", "composition")
    assert str(x) == "(q+1)*M[(1,1)] + q*M[(2)]"
    assert str(x.specialize(1)) == "2*M[(1,1)] + M[(2)]"

def test_tensor_and_swap():
    x = LinComb({(1,): 1})
    y = LinComb({(2, 1): 3})
    t = tensor(x, y)
    assert t.terms == {((1,), (2, 1)): 3}
    assert swap(t).terms == {((2, 1), (1,)): 3}
    assert str(t) == "3*M[1] ⊗ M[21]"

def test_twisted_tensor_square_product():
    algebra = FQSymQ()
    x = algebra.tensor_monomial((1,), (1,))
    y = algebra.tensor_monomial((1,), ())
    product = algebra.tensor_square_product(x, y)
    expected = tensor(algebra.product(algebra.monomial((1,)), algebra.monomial((1,))), algebra.monomial((1,))) * q
    assert product == expected

def test_twisted_tensor_product_at_q_one():
    algebra = FQSymQ()
    rule = algebra._product_rule
    x = algebra.tensor_monomial((1,), (2, 1)) + algebra.tensor_monomial((), (1,))
    y = algebra.tensor_monomial((1, 2), (1,)) + algebra.tensor_monomial((1,), ())
    twisted = twisted_tensor_product(x, y, rule)
    plain = tensor_product(x, y, rule)
    assert twisted != plain
    assert twisted[((1, 2, 3), (2, 1, 3))] == q ** 4
    assert twisted.specialize(1) == plain

def test_pairing():
    x = LinComb({(1,): 2, (1, 1): 3})
    y = LinComb({(1, 1): 5}, "S")
    assert pairing(x, y) == 15

def test_collect_rejects_non_constant_classes():
    x = LinComb({(1, 2): 1, (2, 1): 2})
    with pytest.raises(VerificationError):
        collect(x, lambda w: tuple(sorted(w)), lambda cls: [(1, 2), (2, 1)], "R", "word")
    y = LinComb({(1, 2): 3, (2, 1): 3})
    assert collect(y, lambda w: tuple(sorted(w)), lambda cls: [(1, 2), (2, 1)], "R", "word").terms == {(1, 2): 3}

@given(small_endofunctions, small_endofunctions, small_endofunctions)
def test_product_is_bilinear(f, g, h):
    algebra = EQSym()
    x, y, z = algebra.monomial(f), algebra.monomial(g), algebra.monomial(h)
    assert algebra.product(x + y, z) == algebra.product(x, z) + algebra.product(y, z)
    assert algebra.product(z, 2 * x) == algebra.product(z, x) * 2

def test_hopf_check_on_endofunctions():
    report = hopf_check(EQSym(), 3)
    assert report["passed"], format_report(report)
    assert report["commutative"]
    assert not report["cocommutative"]
    assert report["checks"]["duality"]["passed"]

def test_hopf_check_degree_zero_is_trivial():
    report = hopf_check(PhiSym(), 0)
    assert report["passed"]
    assert "cocommutative: yes" in format_report(report)

def test_resource_limits(monkeypatch):
    monkeypatch.delenv("HOPFCOMB_MAX_DEGREE", raising=False)
    assert get_conf().max_degree == 8
    monkeypatch.setenv("HOPFCOMB_MAX_DEGREE", "5")
    assert get_conf().max_degree == 5
    assert get_conf(limit=3).max_degree == 3
    with pytest.raises(ResourceLimitError):
        check_degree(6)
    monkeypatch.setenv("HOPFCOMB_MAX_DEGREE", "five")
    with pytest.raises(ConfigurationError):
        get_conf()

def test_session_limit():
    set_limit(2)
    try:
        with pytest.raises(ResourceLimitError):
            check_degree(3)
    finally:
        set_limit(None)
    assert check_degree(3) == 3
