"""
EQSym, the commutative Hopf algebra spanned by the M_f, f an endofunction,
and its graded dual ESym with the free basis S^f.

The product is computed combinatorially: C^h_{f,g} counts the shuffles tau of
(1..n) with (n+1..n+m) such that h = tau^-1 o (f.g) o tau. The polynomial
realization in commuting variables x_ij (truncated to i, j <= N, with the
relations x_ij x_ik = 0) is kept as an independent oracle.
"""

import itertools
from collections import Counter
from functools import lru_cache

from sympy import divisors, mobius
from sympy.polys.ring_series import rs_log

from hopfcomb.exceptions import throw
from hopfcomb.hopf_algebras.combinat import (
    compose,
    cut_points,
    enumerate_objects,
    invert_series,
    inverse,
    is_connected,
    series_coefficients,
    series_from,
    shift,
    shifted_concat,
    shuffle_permutations,
    t,
)
from hopfcomb.hopf_algebras.free_module import HopfAlgebra
from hopfcomb.utils import get_logger

logger = get_logger(__name__)

# Structure constants
# -------------------

@lru_cache(maxsize=None)
def structure_constants(f, g):
    """dict h -> C^h_{f,g}."""
    fg = shifted_concat(f, g)
    counts = Counter()
    for tau in shuffle_permutations(len(f), len(g)):
        counts[compose(inverse(tau), compose(fg, tau))] += 1
    return dict(counts)

def cuts(h):
    """Pairs (f, g) with f.g = h, including the trivial ones."""
    n = len(h)
    result = []
    for k in sorted(set([0] + cut_points(h) + [n])):
        result.append((h[:k], shift(h[k:], -k)))
    return result

@lru_cache(maxsize=None)
def dual_structure_constants(h):
    """dict (f, g) -> C^h_{f,g}, read off the conjugates of h that split at some k."""
    n = len(h)
    counts = Counter()
    for k in range(n + 1):
        for tau in shuffle_permutations(k, n - k):
            h0 = compose(tau, compose(h, inverse(tau)))
            if all(x <= k for x in h0[:k]) and all(x > k for x in h0[k:]):
                counts[(h0[:k], shift(h0[k:], -k))] += 1
    return dict(counts)

def product_M(f, g):
    return EQSym().product(EQSym().monomial(f), EQSym().monomial(g))

def coproduct_M(h):
    return EQSym().coproduct(EQSym().monomial(h))

def product_S(f, g):
    return ESym().product(ESym().monomial(f), ESym().monomial(g))

def coproduct_S(h):
    return ESym().coproduct(ESym().monomial(h))

class EQSym(HopfAlgebra):
    name = "eqsym"
    basis_name = "M"
    kind = "word"
    family = "endofunctions"
    dual = "hopfcomb.hopf_algebras.eqsym.ESym"

    def basis(self, n):
        return enumerate_objects(self.family, n)

    def product_on_basis(self, a, b):
        return self.element(structure_constants(a, b))

    def coproduct_on_basis(self, h):
        result = self.tensor_zero()
        for f, g in cuts(h):
            result = result + self.tensor_monomial(f, g)
        return result

class ESym(HopfAlgebra):
    name = "eqsym"
    basis_name = "S"
    kind = "word"
    family = "endofunctions"
    dual = "hopfcomb.hopf_algebras.eqsym.EQSym"

    def basis(self, n):
        return enumerate_objects(self.family, n)

    def product_on_basis(self, a, b):
        return self.monomial(shifted_concat(a, b))

    def coproduct_on_basis(self, h):
        result = self.tensor_zero()
        for (f, g), c in dual_structure_constants(h).items():
            result = result + self.tensor_monomial(f, g, c)
        return result

# Counting
# --------

def endofunction_series(prec):
    return series_from([n ** n for n in range(prec)])

def connected_count(n):
    """Connected endofunctions of [n], from C(t) = 1 - 1/E(t)."""
    if n < 1:
        throw("connected_count is defined for n >= 1")
    return -invert_series([k ** k for k in range(n + 1)], n + 1)[n]

def connected_endofunctions(n):
    return [f for f in enumerate_objects("endofunctions", n) if is_connected(f)]

def lie_dims(n):
    """
    Dimension of the degree-n part of the free Lie algebra whose generators
    are graded by connected_count, from prod_k (1 - t^k)^(-l_k) = E(t).
    """
    if n < 1:
        throw("lie_dims is defined for n >= 1")
    logs = series_coefficients(rs_log(endofunction_series(n + 1), t, n + 1), n + 1)
    total = sum(int(mobius(n // d)) * d * logs[d] for d in divisors(n))
    return int(total / n)

def free_dimension_check(max_n):
    """Degree-n dimensions n^n of ESym equal the coefficients of 1/(1 - C(t)) with C counted by brute force."""
    generators = [1] + [-len(connected_endofunctions(k)) for k in range(1, max_n + 1)]
    return invert_series(generators, max_n + 1) == [n ** n for n in range(max_n + 1)]

# Polynomial realization
# ----------------------
# An oracle monomial is a sorted tuple of pairs (i, j) standing for the
# commuting product of the x_ij; relation families kill some of them.

RELATIONS = {
    # x_ij x_ik = 0
    "rows": lambda a, b: a[0] == b[0],
    # x_ik x_jk = 0
    "columns": lambda a, b: a[1] == b[1],
    # x_ij x_jk = 0 for i != k
    "involutions": lambda a, b: (a[1] == b[0] and a[0] != b[1]) or (b[1] == a[0] and b[0] != a[1]),
    # x_ij x_kl = 0 for i < k and j > l
    "noncrossing": lambda a, b: (a[0] - b[0]) * (a[1] - b[1]) < 0,
}

def _killed(monomial, relations):
    for a, b in itertools.combinations(monomial, 2):
        for name in relations:
            if RELATIONS[name](a, b):
                return True
    return False

def oracle_realize(f, N, relations=("rows",)):
    """M_f truncated to indices <= N, as a Counter of oracle monomials."""
    result = Counter()
    for indices in itertools.combinations(range(1, N + 1), len(f)):
        monomial = tuple(sorted((indices[k], indices[f[k] - 1]) for k in range(len(f))))
        if not _killed(monomial, relations):
            result[monomial] += 1
    return result

def oracle_multiply(x, y, relations=("rows",)):
    result = Counter()
    for a, ca in x.items():
        for b, cb in y.items():
            monomial = tuple(sorted(a + b))
            if not _killed(monomial, relations):
                result[monomial] += ca * cb
    return Counter(dict((m, c) for m, c in result.items() if c))

def oracle_expand(element, N, relations=("rows",)):
    result = Counter()
    for label, c in element.terms.items():
        for monomial, k in oracle_realize(label, N, relations).items():
            result[monomial] += c * k
    return Counter(dict((m, c) for m, c in result.items() if c))

def oracle_product_check(f, g, N, product=None, relations=("rows",)):
    """
    Compare M_f M_g computed in the truncated polynomial ring with the
    combinatorial product realized at the same truncation.
    """
    if N < len(f) + len(g):
        throw("Truncation N={0} cannot separate degree {1} basis elements".format(N, len(f) + len(g)))
    product = product or product_M
    lhs = oracle_multiply(oracle_realize(f, N, relations), oracle_realize(g, N, relations), relations)
    rhs = oracle_expand(product(f, g), N, relations)
    if lhs != rhs:
        logger.info("oracle mismatch for %s * %s at N=%s", f, g, N)
    return lhs == rhs

def oracle_sweep(max_degree, family="endofunctions", product=None, relations=("rows",)):
    """Check every pair of positive degrees n + m <= max_degree at N = n + m."""
    checked = 0
    for n in range(1, max_degree):
        for m in range(1, max_degree - n + 1):
            for f in enumerate_objects(family, n):
                for g in enumerate_objects(family, m):
                    if not oracle_product_check(f, g, n + m, product, relations):
                        return False, (f, g)
                    checked += 1
    logger.debug("oracle sweep: %s pairs up to degree %s", checked, max_degree)
    return True, None
