"""
q-deformed structures: quasi-symmetric functions realized on q-commuting
variables (x_j x_i = q x_i x_j for j > i), their dual NCSF_q, the twisted
coproduct of FQSym_q and its q = 0 cocommutative relative, and q-analogues of
the hypoplactic and sylvester congruences as rewriting systems.

Twisted means that the coproduct is multiplicative for the tensor product
(a (x) b)(a' (x) b') = q^(deg b * deg a') (aa' (x) bb').
"""

import itertools
from collections import Counter
from functools import lru_cache

from sympy import catalan

from hopfcomb.config import check_degree, get_conf
from hopfcomb.exceptions import throw, UnknownAlgebraError, VerificationError
from hopfcomb.hopf_algebras.combinat import (
    compositions,
    connected_factorization,
    descent_composition,
    enumerate_objects,
    inversions,
    shifted_concat,
    shifted_shuffle,
    standardize,
)
from hopfcomb.hopf_algebras.free_module import (
    HopfAlgebra,
    LinComb,
    QRing,
    degree_chi,
    q_power,
    swap,
    tensor,
    twisted_tensor_product,
)
from hopfcomb.utils import get_logger

logger = get_logger(__name__)

# FQSym_q
# -------

def cross_inversions(alpha, beta):
    """Pairs (a, b), a in alpha and b in beta, with a > b."""
    return sum(1 for a in alpha for b in beta if a > b)

def product_F_terms(alpha, beta):
    return dict(Counter(shifted_shuffle(alpha, beta)))

def coproduct_q_F_terms(sigma):
    """Cuts sigma = alpha.beta weighted by q^inv(alpha, beta)."""
    terms = {}
    for k in range(len(sigma) + 1):
        alpha, beta = sigma[:k], sigma[k:]
        key = (standardize(alpha), standardize(beta))
        terms[key] = terms.get(key, 0) + q_power(cross_inversions(alpha, beta))
    return terms

class FQSymQ(HopfAlgebra):
    name = "fqsym-q"
    basis_name = "F"
    kind = "word"
    twisted = True

    def basis(self, n):
        return enumerate_objects("permutations", n)

    def product_on_basis(self, a, b):
        return self.element(product_F_terms(a, b))

    def coproduct_on_basis(self, sigma):
        return LinComb(coproduct_q_F_terms(sigma), (self.basis_name, self.basis_name), (self.kind, self.kind))

def product_F(alpha, beta):
    return FQSymQ().product(FQSymQ().monomial(alpha), FQSymQ().monomial(beta))

def coproduct_q_F(sigma):
    return FQSymQ().coproduct(FQSymQ().monomial(sigma))

def ordinary_coproduct_F(sigma):
    algebra = FQSymQ()
    result = algebra.tensor_zero()
    for k in range(len(sigma) + 1):
        result = result + algebra.tensor_monomial(standardize(sigma[:k]), standardize(sigma[k:]))
    return result

# q = 0
# -----
# P_sigma is the product of the F over the connected factors of sigma. The
# connected F are primitive and the coproduct is extended multiplicatively.

@lru_cache(maxsize=None)
def p_terms(sigma):
    algebra = FQSymQ()
    result = algebra.one()
    for factor in connected_factorization(sigma):
        result = algebra.product(result, algebra.monomial(factor))
    return dict(result.terms)

@lru_cache(maxsize=None)
def f_in_p(sigma):
    """F_sigma over the P, peeling off terms with fewer connected factors."""
    expansion = p_terms(sigma)
    result = Counter({sigma: 1})
    for mu, c in expansion.items():
        if mu == sigma:
            continue
        if len(connected_factorization(mu)) >= len(connected_factorization(sigma)):
            raise VerificationError("P_{0} is not triangular at F_{1}".format(sigma, mu))
        for label, k in f_in_p(mu).items():
            result[label] -= c * k
    return dict((label, c) for label, c in result.items() if c)

def factor_splittings(sigma):
    """(left, right) over the subsets of connected factors of sigma, orders kept."""
    factors = connected_factorization(sigma)
    for mask in itertools.product((0, 1), repeat=len(factors)):
        left, right = (), ()
        for factor, side in zip(factors, mask):
            if side == 0:
                left = shifted_concat(left, factor)
            else:
                right = shifted_concat(right, factor)
        yield left, right

def q0_coproduct(sigma):
    algebra = FQSymQ()
    result = algebra.tensor_zero()
    for tau, a in f_in_p(sigma).items():
        for left, right in factor_splittings(tau):
            result = result + tensor(algebra.element(p_terms(left)), algebra.element(p_terms(right))) * a
    return result

class FQSymQ0(FQSymQ):
    twisted = False

    def coproduct_on_basis(self, sigma):
        return q0_coproduct(sigma)

def cocommutativity_check(max_degree):
    for n in range(1, max_degree + 1):
        for sigma in enumerate_objects("permutations", n):
            delta = q0_coproduct(sigma)
            if swap(delta) != delta:
                return False, sigma
    return True, None

# QSym_q and NCSF_q
# -----------------

@lru_cache(maxsize=None)
def _q_quasi_shuffle(first, second):
    if not first or not second:
        return ((first or second, QRing.one),)
    terms = Counter()
    for rest, c in _q_quasi_shuffle(first[1:], second):
        terms[(first[0],) + rest] += c
    for rest, c in _q_quasi_shuffle(first, second[1:]):
        terms[(second[0],) + rest] += c * q_power(second[0] * sum(first))
    for rest, c in _q_quasi_shuffle(first[1:], second[1:]):
        terms[(first[0] + second[0],) + rest] += c * q_power(second[0] * sum(first[1:]))
    return tuple(terms.items())

def q_quasi_shuffle(first, second):
    """M_first M_second: quasi-shuffles weighted by q^(I_a J_b) whenever J_b comes before I_a."""
    return dict((k, c) for k, c in _q_quasi_shuffle(tuple(first), tuple(second)) if c)

def deconcatenations(parts):
    return [(parts[:k], parts[k:]) for k in range(len(parts) + 1)]

class QSymQ(HopfAlgebra):
    name = "qsym-q"
    basis_name = "M"
    kind = "composition"
    twisted = True

    def basis(self, n):
        return list(compositions(n))

    def product_on_basis(self, a, b):
        return self.element(q_quasi_shuffle(a, b))

    def coproduct_on_basis(self, parts):
        result = self.tensor_zero()
        for left, right in deconcatenations(parts):
            result = result + self.tensor_monomial(left, right)
        return result

def coproduct_q_M(parts):
    return QSymQ().coproduct(QSymQ().monomial(tuple(parts)))

def coproduct_q_S_row(n):
    """Delta_q S_n = sum over i + j = n of q^(ij) S_i (x) S_j."""
    algebra = NCSFQ()
    result = algebra.tensor_zero()
    for i in range(n + 1):
        left = (i,) if i else ()
        right = (n - i,) if n - i else ()
        result = result + algebra.tensor_monomial(left, right, q_power(i * (n - i)))
    return result

class NCSFQ(HopfAlgebra):
    name = "ncsf-q"
    basis_name = "S"
    kind = "composition"
    twisted = True

    def basis(self, n):
        return list(compositions(n))

    def product_on_basis(self, a, b):
        return self.monomial(tuple(a) + tuple(b))

    def coproduct_on_basis(self, parts):
        result = self.tensor_monomial((), ())
        for part in parts:
            result = twisted_tensor_product(result, coproduct_q_S_row(part), self._product_rule, chi=degree_chi)
        return result

def coproduct_q_S(parts):
    return NCSFQ().coproduct(NCSFQ().monomial(tuple(parts)))

def twisted_morphism_check(algebra, max_degree):
    """Delta(ab) = Delta(a) Delta(b) in the twisted tensor square, for basis pairs of total degree <= max_degree."""
    for n in range(1, max_degree):
        for m in range(1, max_degree - n + 1):
            for a in algebra.basis(n):
                for b in algebra.basis(m):
                    lhs = algebra.coproduct(algebra.product_on_basis(a, b))
                    rhs = algebra.tensor_square_product(algebra.coproduct_on_basis(a), algebra.coproduct_on_basis(b))
                    if lhs != rhs:
                        logger.info("%s: twisted compatibility fails at %s, %s", algebra.name, a, b)
                        return False, (a, b)
    return True, None

# Fundamental basis and the map phi
# ---------------------------------

def refinements(parts):
    """Compositions finer than `parts`."""
    for pieces in itertools.product(*[list(compositions(p)) for p in parts]):
        yield tuple(itertools.chain.from_iterable(pieces))

def fundamental_to_M(x):
    """F_I = sum of the M_J over the J finer than I."""
    terms = {}
    for parts, c in x.terms.items():
        for finer in refinements(parts):
            terms[finer] = terms.get(finer, 0) + c
    return QSymQ().element(terms)

def M_to_fundamental(x):
    terms = {}
    for parts, c in x.terms.items():
        for finer in refinements(parts):
            sign = -1 if (len(finer) - len(parts)) % 2 else 1
            terms[finer] = terms.get(finer, 0) + sign * c
    return LinComb(terms, "F", "composition")

def phi_map(x):
    """F_sigma -> q^inv(sigma) F_c(sigma), in the fundamental basis of QSym_q."""
    terms = {}
    for sigma, c in x.terms.items():
        key = descent_composition(sigma)
        terms[key] = terms.get(key, 0) + c * q_power(inversions(sigma))
    return LinComb(terms, "F", "composition")

def phi_morphism_check(max_degree):
    """phi(F_s F_t) = phi(F_s) phi(F_t) and (phi (x) phi) Delta_q = Delta_q phi, degrees <= max_degree."""
    fqsym, qsym = FQSymQ(), QSymQ()
    for n in range(1, max_degree + 1):
        for sigma in enumerate_objects("permutations", n):
            image = fundamental_to_M(phi_map(fqsym.monomial(sigma)))
            delta = fqsym.coproduct_on_basis(sigma)
            lhs = qsym.tensor_zero()
            for (alpha, beta), c in delta.terms.items():
                left = fundamental_to_M(phi_map(fqsym.monomial(alpha)))
                right = fundamental_to_M(phi_map(fqsym.monomial(beta)))
                lhs = lhs + tensor(left, right) * c
            if lhs != qsym.coproduct(image):
                return False, ("coproduct", sigma)
            for m in range(1, max_degree - n + 1):
                for tau in enumerate_objects("permutations", m):
                    product = fundamental_to_M(phi_map(fqsym.product_on_basis(sigma, tau)))
                    other = fundamental_to_M(phi_map(fqsym.monomial(tau)))
                    if product != qsym.product(image, other):
                        return False, ("product", sigma, tau)
    return True, None

# q-commuting realization
# -----------------------
# A monomial in x_1 < ... < x_N is an exponent vector; reordering
# x^a x^b into normal form costs q^(a_i b_j) for every i > j.

def qsym_realize(x, N):
    result = {}
    for parts, c in x.terms.items():
        for indices in itertools.combinations(range(N), len(parts)):
            vector = [0] * N
            for i, part in zip(indices, parts):
                vector[i] = part
            key = tuple(vector)
            result[key] = result.get(key, 0) + c
    return dict((k, c) for k, c in result.items() if c)

def q_multiply_monomials(a, b):
    exponent = sum(a[i] * b[j] for i in range(len(a)) for j in range(i))
    return tuple(x + y for x, y in zip(a, b)), q_power(exponent)

def qsym_oracle_check(first, second, N=None):
    """M_first M_second computed on q-commuting monomials at truncation N."""
    N = N or sum(first) + sum(second)
    algebra = QSymQ()
    lhs = {}
    for a, ca in qsym_realize(algebra.monomial(tuple(first)), N).items():
        for b, cb in qsym_realize(algebra.monomial(tuple(second)), N).items():
            key, weight = q_multiply_monomials(a, b)
            lhs[key] = lhs.get(key, 0) + ca * cb * weight
    lhs = dict((k, c) for k, c in lhs.items() if c)
    rhs = qsym_realize(algebra.product(algebra.monomial(tuple(first)), algebra.monomial(tuple(second))), N)
    return lhs == rhs

# q-hypoplactic and q-sylvester rewriting
# ---------------------------------------
# Both systems rewrite an adjacent factor ca (a < c) into ac at the cost of
# one factor q:
#   qH: b v c a -> q b v a c   with a < b <= c
#       c a v b -> q a c v b   with a <= b < c
#   qS: only the second rule.

SYSTEMS = ("qH", "qS")

def _check_system(system):
    if system not in SYSTEMS:
        throw("Unknown rewriting system {0!r}, expected qH or qS".format(system), UnknownAlgebraError)

def rewrites(w, system):
    """Words obtained from w by one rewriting step."""
    _check_system(system)
    w = tuple(w)
    result = []
    for j in range(len(w) - 1):
        c, a = w[j], w[j + 1]
        if not a < c:
            continue
        applies = any(a <= b < c for b in w[j + 2:])
        if system == "qH" and not applies:
            applies = any(a < b <= c for b in w[:j])
        if applies:
            result.append(w[:j] + (a, c) + w[j + 2:])
    return result

@lru_cache(maxsize=None)
def irreducible_forms(w, system):
    successors = rewrites(w, system)
    if not successors:
        return frozenset([w])
    return frozenset(itertools.chain.from_iterable(irreducible_forms(v, system) for v in successors))

def q_rewrite(w, system):
    """
    Normal form of w and the exponent of q collected on the way, each step
    removing one inversion. Raises VerificationError when w has several
    normal forms.
    """
    w = tuple(w)
    check_degree(len(w), "rewrite length", get_conf().max_rewrite_length)
    forms = irreducible_forms(w, system)
    if len(forms) > 1:
        raise VerificationError("{0} rewriting of {1} is not confluent: {2}".format(system, w, sorted(forms)),
                                report={"word": w, "system": system, "forms": sorted(forms)})
    normal, = forms
    return normal, inversions(w) - inversions(normal)

def confluence_check(n, letters=None, system="qS", permutations_only=False):
    """Every word of length n has a single normal form. Returns (confluent, first witness)."""
    if permutations_only:
        words = enumerate_objects("permutations", n)
    else:
        words = itertools.product(range(1, (letters or n) + 1), repeat=n)
    for w in words:
        forms = irreducible_forms(tuple(w), system)
        if len(forms) > 1:
            logger.warning("%s is not confluent at %s", system, w)
            return False, (tuple(w), sorted(forms))
    return True, None

def class_census(system, n):
    """Congruence classes of the permutations of size n, q-powers forgotten."""
    _check_system(system)
    words = list(enumerate_objects("permutations", n))
    parent = dict((w, w) for w in words)

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for w in words:
        for v in rewrites(w, system):
            parent[find(w)] = find(v)
    classes = Counter(find(w) for w in words)
    confluent, _ = confluence_check(n, system=system, permutations_only=True)
    return {
        "system": system,
        "n": n,
        "words": len(words),
        "classes": len(classes),
        "largest_class": max(classes.values()) if classes else 0,
        "confluent": confluent,
    }

def sylvester_class_count(n):
    return class_census("qS", n)["classes"]

def hypoplactic_class_count(n):
    return class_census("qH", n)["classes"]

def expected_class_count(system, n):
    return int(catalan(n)) if system == "qS" else 2 ** max(n - 1, 0)

def change_basis(x, target):
    """F of FQSym_q to the F basis of QSym_q through phi, or between the M and F bases of QSym_q."""
    if x.basis == "F" and x.kind == "word" and target in ("F", "qsym-F"):
        return phi_map(x)
    if x.basis == "F" and x.kind == "composition" and target == "M":
        return fundamental_to_M(x)
    if x.basis == "M" and target == "F":
        return M_to_fundamental(x)
    throw("No basis change from {0} to {1}".format(x.basis, target))

def sylvester_confluence_check(n):
    return confluence_check(n, system="qS", permutations_only=True)

def hypoplactic_confluence_check(n):
    return confluence_check(n, system="qH", permutations_only=True)
