"""
PhiSym, the cocommutative Hopf algebra on permutations described through
their cycles: the product of phi_sigma and phi_tau is the sum over all
matchings of the cycles of sigma with the (shifted) cycles of tau, paired
cycles being replaced by the elements of their cyclic shuffle.

The bases S' (products of phi over connected factors) and S'' (iterated
matching products of single cycles) both multiply by shifted concatenation;
only S'' also has the coproduct of S^sigma in SGSym. The
quotient by cycle type (basis Y) is isomorphic to Sym.
"""

import itertools
from collections import Counter
from functools import lru_cache

from sympy import Rational, factorial

from hopfcomb.exceptions import throw, VerificationError
from hopfcomb.hopf_algebras.combinat import (
    canonical_cycle,
    canonical_cycle_set,
    connected_factorization,
    cycle_decomposition,
    cycle_type,
    enumerate_objects,
    from_cycles,
    integer_partitions,
    inverse,
    multiplicities,
    partial_matchings,
    shift,
    shifted_concat,
    shuffle,
    standardize,
)
from hopfcomb.hopf_algebras.free_module import HopfAlgebra, LinComb
from hopfcomb.hopf_algebras.sgqsym import SGSym, cycle_splittings
from hopfcomb.hopf_algebras.symfunc import SymM, multiply
from hopfcomb.utils import entries, get_logger

logger = get_logger(__name__)

# Cycles
# ------

def rotations(cycle):
    return [cycle[i:] + cycle[:i] for i in range(len(cycle))]

def cyclic_shuffle(first, second):
    """Cycles whose cycle words are shuffles of cycle words of two disjoint cycles."""
    first, second = canonical_cycle(first), canonical_cycle(second)
    if set(first) & set(second):
        throw("Cyclic shuffle needs disjoint cycles, got {0} and {1}".format(first, second))
    if second[0] < first[0]:
        first, second = second, first
    result = set()
    for rotated in rotations(second):
        for word in shuffle(first[1:], rotated):
            result.add(canonical_cycle((first[0],) + word))
    return sorted(result)

def matching_product(first, second):
    """
    Cycle sets obtained from all matchings of the cycles of `first` with
    those of `second`, listed with multiplicity.
    """
    result = []
    for matching in partial_matchings(list(first), list(second)):
        used = set(entries(matching))
        singles = [c for c in tuple(first) + tuple(second) if c[0] not in used]
        for combo in itertools.product(*[cyclic_shuffle(a, b) for a, b in matching]):
            result.append(canonical_cycle_set(singles + list(combo)))
    return result

@lru_cache(maxsize=None)
def product_phi_terms(sigma, tau):
    n = len(sigma)
    shifted = tuple(shift(c, n) for c in cycle_decomposition(tau))
    counts = Counter()
    for cycles in matching_product(cycle_decomposition(sigma), shifted):
        counts[from_cycles(cycles, n + len(tau))] += 1
    return dict(counts)

def product_phi(sigma, tau):
    return PhiSym().product(PhiSym().monomial(sigma), PhiSym().monomial(tau))

def coproduct_phi(sigma):
    return PhiSym().coproduct(PhiSym().monomial(sigma))

class PhiSym(HopfAlgebra):
    name = "phisym"
    basis_name = "phi"
    kind = "word"

    def basis(self, n):
        return enumerate_objects("permutations", n)

    def product_on_basis(self, a, b):
        return self.element(product_phi_terms(a, b))

    def coproduct_on_basis(self, sigma):
        result = self.tensor_zero()
        for (alpha, beta), c in cycle_splittings(sigma).items():
            result = result + self.tensor_monomial(alpha, beta, c)
        return result

# S' and S''
# ----------

def number_of_cycles(sigma):
    return len(cycle_decomposition(sigma))

@lru_cache(maxsize=None)
def s_prime_terms(sigma):
    """S'_sigma in the phi basis."""
    algebra = PhiSym()
    result = algebra.one()
    for factor in connected_factorization(sigma):
        result = algebra.product(result, algebra.monomial(factor))
    return dict(result.terms)

@lru_cache(maxsize=None)
def s_second_terms(sigma):
    """S''_sigma in the phi basis: iterated matching product of the cycles of sigma."""
    cycles = cycle_decomposition(sigma)
    if not cycles:
        return {(): 1}
    sets = [(cycles[0],)]
    for c in cycles[1:]:
        sets = list(itertools.chain.from_iterable(matching_product(s, (c,)) for s in sets))
    return dict(Counter(from_cycles(s, len(sigma)) for s in sets))

EXPANSIONS = {"Sp": s_prime_terms, "Ss": s_second_terms}

def _expansion(basis):
    if basis not in EXPANSIONS:
        throw("Unknown PhiSym basis {0!r}".format(basis))
    return EXPANSIONS[basis]

def to_phi(x):
    """An element of the S' or S'' basis, expanded over the phi."""
    expand = _expansion(x.basis)
    terms = {}
    for label, c in x.terms.items():
        for sigma, k in expand(label).items():
            terms[sigma] = terms.get(sigma, 0) + c * k
    return PhiSym().element(terms)

@lru_cache(maxsize=None)
def _phi_in(basis, sigma):
    """phi_sigma in the S' or S'' basis, peeling off terms with fewer cycles."""
    expansion = _expansion(basis)(sigma)
    if expansion.get(sigma) != 1:
        raise VerificationError("{0}_{1} does not contain phi_{1} once".format(basis, sigma))
    result = Counter({sigma: 1})
    for mu, c in expansion.items():
        if mu == sigma:
            continue
        if number_of_cycles(mu) >= number_of_cycles(sigma):
            raise VerificationError("{0}_{1} is not triangular at phi_{2}".format(basis, sigma, mu))
        for label, k in _phi_in(basis, mu).items():
            result[label] -= c * k
    return dict((label, c) for label, c in result.items() if c)

def from_phi(x, basis):
    terms = {}
    for sigma, c in x.terms.items():
        for label, k in _phi_in(basis, sigma).items():
            terms[label] = terms.get(label, 0) + c * k
    return LinComb(terms, basis, "word")

class PhiSymSprime(HopfAlgebra):
    """S' basis; products and coproducts are computed through the phi."""
    name = "phisym"
    basis_name = "Sp"
    kind = "word"

    def basis(self, n):
        return enumerate_objects("permutations", n)

    def product_on_basis(self, a, b):
        phi = PhiSym()
        return from_phi(phi.product(to_phi(self.monomial(a)), to_phi(self.monomial(b))), self.basis_name)

    def coproduct_on_basis(self, a):
        result = self.tensor_zero()
        for (left, right), c in PhiSym().coproduct(to_phi(self.monomial(a))).terms.items():
            left_part = from_phi(PhiSym().monomial(left), self.basis_name)
            right_part = from_phi(PhiSym().monomial(right), self.basis_name)
            for l, cl in left_part.terms.items():
                for r, cr in right_part.terms.items():
                    result = result + self.tensor_monomial(l, r, c * cl * cr)
        return result

class PhiSymSsecond(PhiSymSprime):
    basis_name = "Ss"

# Quotient by cycle type
# ----------------------

def cycle_type_representative(parts):
    cycles, start = [], 0
    for p in parts:
        cycles.append(tuple(range(start + 1, start + p + 1)))
        start += p
    return from_cycles(cycles, start)

def project_to_Y(x):
    return x.map_labels(cycle_type, "Y", "partition")

def quotient_Y_product(first, second):
    return PhiSymQuotient().product_on_basis(first, second)

class PhiSymQuotient(HopfAlgebra):
    name = "phisym"
    basis_name = "Y"
    kind = "partition"

    def basis(self, n):
        return integer_partitions(n)

    def product_on_basis(self, a, b):
        sigma, tau = cycle_type_representative(a), cycle_type_representative(b)
        return project_to_Y(PhiSym().element(product_phi_terms(sigma, tau)))

    def coproduct_on_basis(self, a):
        result = self.tensor_zero()
        for mask in itertools.product((0, 1), repeat=len(a)):
            left = tuple(p for p, side in zip(a, mask) if side == 0)
            right = tuple(p for p, side in zip(a, mask) if side == 1)
            result = result + self.tensor_monomial(left, right)
        return result

def representative_independence_check(max_degree):
    """Y products computed from every pair of representatives agree, total degree up to max_degree."""
    quotient = PhiSymQuotient()
    by_type = {}
    for n in range(1, max_degree + 1):
        for sigma in enumerate_objects("permutations", n):
            by_type.setdefault(cycle_type(sigma), []).append(sigma)
    for a, sigmas in by_type.items():
        for b, taus in by_type.items():
            if sum(a) + sum(b) > max_degree:
                continue
            expected = quotient.product_on_basis(a, b)
            for sigma in sigmas:
                for tau in taus:
                    if project_to_Y(PhiSym().element(product_phi_terms(sigma, tau))) != expected:
                        return False, (sigma, tau)
    return True, None

def y_coefficient(parts):
    numerator, denominator = 1, 1
    for mult in multiplicities(parts).values():
        numerator *= int(factorial(mult))
    for part in parts:
        denominator *= int(factorial(part - 1))
    return Rational(numerator, denominator)

def y_to_sym(x):
    """Y_l -> prod_i m_i! / prod_j (l_j - 1)! m_l, extended linearly."""
    terms = {}
    for parts, c in x.terms.items():
        terms[parts] = terms.get(parts, 0) + c * y_coefficient(parts)
    return LinComb(terms, "m", "partition")

def iso_check(max_degree):
    """y_to_sym is an algebra morphism and commutes with the coproducts up to max_degree."""
    quotient = PhiSymQuotient()
    for n in range(1, max_degree + 1):
        for a in integer_partitions(n):
            image = y_to_sym(quotient.monomial(a))
            for m in range(1, max_degree - n + 1):
                for b in integer_partitions(m):
                    lhs = y_to_sym(quotient.product_on_basis(a, b))
                    rhs = multiply(image, y_to_sym(quotient.monomial(b)))
                    if lhs != rhs:
                        return False, ("product", a, b)
            delta = quotient.coproduct_on_basis(a)
            images = {}
            for (left, right), c in delta.terms.items():
                key = (left, right)
                images[key] = images.get(key, 0) + c * y_coefficient(left) * y_coefficient(right)
            expected = SymM().coproduct_on_basis(a)
            expected_terms = dict(((l, r), c * y_coefficient(a)) for (l, r), c in expected.terms.items())
            if dict((k, v) for k, v in images.items() if v) != expected_terms:
                return False, ("coproduct", a)
    return True, None

# Biword realization
# ------------------
# phi_sigma is the sum of the biwords (x, a) such that x_i = x_j iff i and j
# lie in the same cycle of sigma and, on the positions of each cycle, the
# inverse of the standardized subword of a is a cycle word of that cycle.

def biword_class(x, a):
    """The permutation whose cycle decomposition the biword (x, a) has."""
    groups = {}
    for position, letter in enumerate(x, 1):
        groups.setdefault(letter, []).append(position)
    cycles = []
    for positions in groups.values():
        word = inverse(standardize(tuple(a[p - 1] for p in positions)))
        cycles.append(tuple(positions[i - 1] for i in word))
    return from_cycles(cycles, len(x))

def phi_realize(sigma, N):
    n = len(sigma)
    result = []
    for x in itertools.product(range(1, N + 1), repeat=n):
        for a in itertools.product(range(1, N + 1), repeat=n):
            if biword_class(x, a) == sigma:
                result.append((x, a))
    return result

@lru_cache(maxsize=None)
def _fiber_sizes(n, N):
    sizes = Counter()
    for x in itertools.product(range(1, N + 1), repeat=n):
        for a in itertools.product(range(1, N + 1), repeat=n):
            sizes[biword_class(x, a)] += 1
    return sizes

def oracle_phi_check(sigma, tau, N=None):
    """
    Multiply the realizations of phi_sigma and phi_tau as noncommutative
    biwords and check that the result is exactly the sum of the realizations
    of the phi in product_phi(sigma, tau).
    """
    n = len(sigma) + len(tau)
    N = N or n
    classes = Counter()
    for x1, a1 in phi_realize(sigma, N):
        for x2, a2 in phi_realize(tau, N):
            classes[biword_class(x1 + x2, a1 + a2)] += 1
    expected = product_phi_terms(sigma, tau) if sigma and tau else {sigma or tau: 1}
    sizes = _fiber_sizes(n, N)
    if set(classes) != set(expected):
        return False
    return all(classes[s] == expected[s] * sizes[s] for s in expected)

def matches_sgsym(algebra, max_degree, coproducts=True):
    """Compare the structure constants of a basis of PhiSym with those of S in SGSym."""
    sgsym = SGSym()
    for n in range(1, max_degree + 1):
        for a in enumerate_objects("permutations", n):
            if coproducts and algebra.coproduct_on_basis(a).terms != sgsym.coproduct_on_basis(a).terms:
                return False, ("coproduct", a)
            for m in range(1, max_degree - n + 1):
                for b in enumerate_objects("permutations", m):
                    if algebra.product_on_basis(a, b).terms != {shifted_concat(a, b): 1}:
                        return False, ("product", a, b)
    return True, None

def sprime_product_check(max_degree):
    """S' multiplies by shifted concatenation. Its coproduct differs from SGSym from degree 4 on."""
    return matches_sgsym(PhiSymSprime(), max_degree, coproducts=False)

def ssecond_matches_sgsym(max_degree):
    """S'' realizes the isomorphism with SGSym: products and coproducts both agree."""
    return matches_sgsym(PhiSymSsecond(), max_degree)

def change_basis(x, target):
    """Between phi, S' and S''; down to Y by cycle type and on to the m basis of Sym."""
    if x.basis == "Y":
        if target != "m":
            throw("Y only maps to the m basis of Sym")
        return y_to_sym(x)
    phi = x if x.basis == "phi" else to_phi(x)
    if target == "phi":
        return phi
    if target in EXPANSIONS:
        return from_phi(phi, target)
    if target == "Y":
        return project_to_Y(phi)
    if target == "m":
        return y_to_sym(project_to_Y(phi))
    throw("No basis change from {0} to {1}".format(x.basis, target))
