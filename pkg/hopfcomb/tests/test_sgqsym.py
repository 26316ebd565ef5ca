import pytest
from sympy import Symbol, expand

from hopfcomb.hopf_algebras.combinat import enumerate_objects
from hopfcomb.hopf_algebras.eqsym import oracle_expand, oracle_sweep
from hopfcomb.hopf_algebras.free_module import LinComb, format_report, hopf_check
from hopfcomb.hopf_algebras.sgqsym import (
    PiQSym,
    QSymEmbedded,
    SGQSym,
    SGSym,
    SymEmbedded,
    WSym,
    WSymCoarse,
    bell_check,
    bell_polynomial,
    change_basis,
    commutative_image,
    coproduct_Mperm,
    cstd,
    has_order_dividing,
    hook_character,
    identity_check,
    is_involution,
    j_embed,
    product_Mperm,
    product_ul,
    product_upi,
    product_uq,
    quotient_independence_check,
    subalgebra_closure_check,
    trace_power_oracle,
    two_row_character,
    ul_combination_to_M,
    wsym_oracle_check,
    wsym_realize,
)
from hopfcomb.hopf_algebras.symfunc import sym

@pytest.mark.parametrize("method", ["conjugation", "splitting", "restriction"])
def test_product_interpretations_agree(method):
    expected = {(1, 2, 5, 4, 3): 1, (1, 4, 3, 2, 5): 1, (1, 5, 3, 4, 2): 2,
                (3, 2, 1, 4, 5): 1, (4, 2, 3, 1, 5): 2, (5, 2, 3, 4, 1): 3}
    assert product_Mperm((1, 2), (3, 2, 1), method).terms == expected

@pytest.mark.slow
def test_product_interpretations_agree_up_to_degree_five():
    for n in range(1, 5):
        for m in range(1, 6 - n):
            for alpha in enumerate_objects("permutations", n):
                for beta in enumerate_objects("permutations", m):
                    expected = product_Mperm(alpha, beta, "conjugation")
                    assert product_Mperm(alpha, beta, "splitting") == expected, (alpha, beta)
                    assert product_Mperm(alpha, beta, "restriction") == expected, (alpha, beta)

@pytest.mark.slow
@pytest.mark.parametrize("relations", [("rows",), ("rows", "columns")])
def test_polynomial_oracle_up_to_degree_five(relations):
    assert oracle_sweep(5, "permutations", product_Mperm, relations) == (True, None)

def test_small_products():
    assert product_Mperm((1,), (2, 1)).terms == {(1, 3, 2): 1, (2, 1, 3): 1, (3, 2, 1): 1}

@pytest.mark.parametrize("n, p, binomial", [(1, 1, 2), (2, 1, 3), (2, 2, 6), (3, 2, 10)])
def test_identity_products(n, p, binomial):
    identity = lambda k: tuple(range(1, k + 1))
    assert product_Mperm(identity(n), identity(p)).terms == {identity(n + p): binomial}

def test_coproduct_over_connected_factors():
    assert coproduct_Mperm((1, 2, 4, 3)).terms == {
        ((1, 2, 4, 3), ()): 1, ((1,), (1, 3, 2)): 1, ((1, 2), (2, 1)): 1, ((), (1, 2, 4, 3)): 1}
    assert len(coproduct_Mperm((3, 1, 2))) == 2

def test_dual_product_is_shifted_concatenation():
    assert SGSym().product_on_basis((2, 1), (1,)).terms == {(2, 1, 3): 1}

def test_circular_standardization():
    assert cstd(["cba", "aba", "ac", "ba"]) == (2, 6, 7, 9, 10, 1, 3, 5, 4, 8)
    assert cstd(["a"]) == (1,)
    assert cstd(["ab", "cd"]) == (2, 1, 4, 3)

def test_set_partition_products():
    assert product_upi(((1, 2, 4), (3,)), ((1,),)) == {
        ((1, 2, 4), (3,), (5,)): 1, ((1, 2, 5), (3,), (4,)): 2,
        ((1, 3, 5), (2,), (4,)): 1, ((1,), (2, 3, 5), (4,)): 1}
    assert product_upi(((1,),), ((1,),)) == {((1,), (2,)): 2}

def test_wsym_realization():
    assert (1, 2, 1, 3, 3, 1) in wsym_realize(((1, 3, 6), (2,), (4, 5)), 3)
    assert wsym_oracle_check(((1,),), ((1, 2),))
    assert wsym_oracle_check(((1, 2),), ((1,), (2,)))

def test_qsym_image():
    assert product_uq((1, 3, 1), (1, 2)) == {
        (1, 1, 2, 3, 1): 2, (1, 1, 3, 1, 2): 2, (1, 1, 3, 2, 1): 2,
        (1, 2, 1, 3, 1): 1, (1, 3, 1, 1, 2): 2, (1, 3, 1, 2, 1): 1}
    assert product_uq((2,), (1,)) == {(2, 1): 1, (1, 2): 1}

@pytest.mark.parametrize("first, second", [((1,), (1,)), ((1,), (2,)), ((2,), (1,)), ((1, 1), (1,))])
def test_qsym_image_matches_permutations(first, second):
    algebra, embedded = SGQSym(), QSymEmbedded()
    lhs = change_basis(embedded.product(embedded.monomial(first), embedded.monomial(second)), "M")
    rhs = algebra.product(change_basis(embedded.monomial(first), "M"), change_basis(embedded.monomial(second), "M"))
    assert lhs == rhs

def test_sym_image():
    assert product_ul((3, 3, 2, 1), (3, 1, 1)) == {(3, 3, 3, 2, 1, 1, 1): 9}
    assert product_ul((1,), (1,)) == {(1, 1): 2}
    assert j_embed(sym("p", (2,))).terms == {(2,): 2}
    algebra, embedded = SGQSym(), SymEmbedded()
    lhs = change_basis(embedded.product(embedded.monomial((1,)), embedded.monomial((1,))), "M")
    one = change_basis(embedded.monomial((1,)), "M")
    assert lhs == algebra.product(one, one)

def test_trace_of_the_square():
    image = oracle_expand(ul_combination_to_M(j_embed(sym("p", (2,)))), 3)
    assert dict(image) == {((1, 2), (2, 1)): 2, ((1, 3), (3, 1)): 2, ((2, 3), (3, 2)): 2}
    assert image == trace_power_oracle(2, 3)

def test_characters():
    identity = (1, 2, 3, 4)
    assert [hook_character(4, k, identity) for k in range(4)] == [1, 3, 3, 1]
    assert two_row_character(4, 2, identity) == 2
    assert hook_character(3, 1, (2, 3, 1)) == -1
    assert two_row_character(4, 2, (2, 1, 4, 3)) == 2

def test_minor_permanent_and_immanant_identities():
    assert identity_check(4) == (True, None)
    assert identity_check(3, N=5) == (True, None)

def test_involutions_form_a_subalgebra():
    assert subalgebra_closure_check(is_involution, 5) == (True, None)
    assert subalgebra_closure_check(has_order_dividing(2), 4) == (True, None)

def test_quotient_is_well_defined():
    assert quotient_independence_check(4) == (True, None)

def test_commutative_image():
    assert commutative_image(LinComb({(2, 1): 1}, "V", "composition")).terms == {(2, 1): 1}
    assert commutative_image(LinComb({(1, 2): 1, (1, 1): 3}, "V", "composition")).terms == {(2, 1): 1, (1, 1): 6}

def test_bell_polynomials():
    x1, x2, x3 = Symbol("x1"), Symbol("x2"), Symbol("x3")
    assert expand(bell_polynomial(3, [x1, x2, x3]) - (x1 ** 3 + 3 * x1 * x2 + x3)) == 0
    assert bell_check(4)

@pytest.mark.parametrize("algebra", [SGQSym(), SGSym(), PiQSym(), WSym(), WSymCoarse(), QSymEmbedded(),
                                     SymEmbedded()])
def test_bialgebra_axioms(algebra):
    report = hopf_check(algebra, 3)
    assert report["passed"], format_report(report)

@pytest.mark.slow
@pytest.mark.parametrize("algebra", [SGQSym(), SGSym(), PiQSym(), WSym(), WSymCoarse(),
                                     QSymEmbedded(), SymEmbedded()])
def test_bialgebra_axioms_up_to_degree_five(algebra):
    report = hopf_check(algebra, 5)
    assert report["passed"], format_report(report)
