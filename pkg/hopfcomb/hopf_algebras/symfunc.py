"""
Classical symmetric functions in the monomial (m), elementary (e), complete
(h), power sum (p) and Schur (s) bases.

Everything is computed in the m basis: products by merging exponent vectors
over l(a) + l(b) variables, Schur functions through Kostka numbers, and the
way back by inverting the transition matrix exactly.
"""

import itertools
from functools import lru_cache

from sympy import Matrix, factorial, subfactorial
from sympy.utilities.iterables import multiset_permutations

from hopfcomb.config import check_degree, get_conf
from hopfcomb.exceptions import throw, UnknownAlgebraError
from hopfcomb.hopf_algebras.combinat import integer_partitions, multiplicities, z_lambda
from hopfcomb.hopf_algebras.free_module import HopfAlgebra, LinComb, tensor
from hopfcomb.utils import get_logger

logger = get_logger(__name__)

BASES = ("m", "e", "h", "p", "s")

def _check_basis(basis):
    if basis not in BASES:
        throw("Unknown symmetric function basis {0!r}, expected one of {1}".format(basis, ", ".join(BASES)),
              UnknownAlgebraError)

def _partition(parts):
    return tuple(sorted((p for p in parts if p), reverse=True))

def _padded(parts, length):
    return tuple(parts) + (0,) * (length - len(parts))

def _clean(c):
    if getattr(c, "is_Integer", False):
        return int(c)
    return c

def conjugate(parts):
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))

# Monomial basis
# --------------

@lru_cache(maxsize=None)
def monomial_product(a, b):
    """m_a * m_b as a dict partition -> coefficient."""
    if not a or not b:
        return {a or b: 1}
    nvars = len(a) + len(b)
    rearrangements = [tuple(v) for v in multiset_permutations(list(_padded(a, nvars)))]
    target = sorted(_padded(b, nvars))
    result = {}
    for nu in integer_partitions(sum(a) + sum(b)):
        if len(nu) > nvars:
            continue
        vector = _padded(nu, nvars)
        count = 0
        for r in rearrangements:
            rest = [x - y for x, y in zip(vector, r)]
            if min(rest) >= 0 and sorted(rest) == target:
                count += 1
        if count:
            result[nu] = count
    return result

def _multiply_m(f, g):
    result = {}
    for a, ca in f.items():
        for b, cb in g.items():
            for nu, k in monomial_product(a, b).items():
                result[nu] = result.get(nu, 0) + ca * cb * k
    return dict((nu, c) for nu, c in result.items() if c)

def m_eval_at_n(parts, n):
    """m_parts evaluated at n ones: the number of distinct monomials of that shape in n variables."""
    if len(parts) > n:
        return 0
    denominator = factorial(n - len(parts))
    for mult in multiplicities(parts).values():
        denominator *= factorial(mult)
    return int(factorial(n) / denominator)

@lru_cache(maxsize=None)
def kostka(shape, content):
    """Number of semistandard tableaux of the given shape and content."""
    if sum(shape) != sum(content):
        return 0
    if not content:
        return 1
    total = 0
    for inner in _horizontal_strip_removals(shape, content[-1]):
        total += kostka(inner, content[:-1])
    return total

def _horizontal_strip_removals(shape, size):
    rows = len(shape)
    ranges = [range(shape[i + 1] if i + 1 < rows else 0, shape[i] + 1) for i in range(rows)]
    for inner in itertools.product(*ranges):
        if sum(shape) - sum(inner) == size:
            yield _partition(inner)

@lru_cache(maxsize=None)
def _to_monomial(basis, parts):
    if not parts:
        return {(): 1}
    if basis == "m":
        return {parts: 1}
    if basis == "s":
        n = sum(parts)
        return dict((mu, kostka(parts, mu)) for mu in integer_partitions(n) if kostka(parts, mu))
    result = {(): 1}
    for part in parts:
        if basis == "p":
            factor = {(part,): 1}
        elif basis == "e":
            factor = {(1,) * part: 1}
        else:
            factor = dict((mu, 1) for mu in integer_partitions(part))
        result = _multiply_m(result, factor)
    return result

@lru_cache(maxsize=None)
def _inverse_transition(basis, n):
    check_degree(n, "symmetric function degree", get_conf().max_word_length)
    parts = integer_partitions(n)
    index = dict((mu, j) for j, mu in enumerate(parts))
    matrix = Matrix.zeros(len(parts), len(parts))
    for i, lam in enumerate(parts):
        for mu, c in _to_monomial(basis, lam).items():
            matrix[i, index[mu]] = c
    logger.debug("inverting the %s -> m transition matrix in degree %s", basis, n)
    return parts, matrix.inv()

def expand_to_monomial(f):
    _check_basis(f.basis)
    result = {}
    for lam, c in f.terms.items():
        for mu, k in _to_monomial(f.basis, lam).items():
            result[mu] = result.get(mu, 0) + c * k
    return LinComb(result, "m", "partition")

def convert(f, target):
    """Change of basis; the result lives in `target`."""
    _check_basis(target)
    g = expand_to_monomial(f)
    if target == "m":
        return g
    result = {}
    for n in sorted(set(sum(mu) for mu in g.terms)):
        parts, inverse = _inverse_transition(target, n)
        for j, mu in enumerate(parts):
            c = g[mu]
            if not c:
                continue
            for i, lam in enumerate(parts):
                if inverse[j, i]:
                    result[lam] = result.get(lam, 0) + c * inverse[j, i]
    return LinComb(dict((lam, _clean(c)) for lam, c in result.items()), target, "partition")

def sym(basis, parts, coeff=1):
    _check_basis(basis)
    return LinComb({_partition(parts): coeff}, basis, "partition")

def multiply(f, g, basis=None):
    """Product of symmetric functions given in any bases, returned in `basis` (default: f's basis)."""
    product = LinComb(_multiply_m(expand_to_monomial(f).terms, expand_to_monomial(g).terms), "m", "partition")
    return convert(product, basis or f.basis)

def character(shape, cycle_type):
    """Irreducible character chi^shape at a permutation of the given cycle type, from s = sum chi p / z."""
    coefficient = convert(sym("s", shape), "p")[_partition(cycle_type)]
    return _clean(coefficient * z_lambda(cycle_type))

def derangements(k):
    return int(subfactorial(k))

# Hopf structure
# --------------

def _sub_multisets(parts):
    """Pairs (left, right, multiplicity) splitting the parts of a partition."""
    counts = sorted(multiplicities(parts).items(), reverse=True)
    for chosen in itertools.product(*[range(m + 1) for _, m in counts]):
        left, right, mult = [], [], 1
        for (part, m), k in zip(counts, chosen):
            left.extend([part] * k)
            right.extend([part] * (m - k))
            mult *= int(factorial(m) / (factorial(k) * factorial(m - k)))
        yield tuple(left), tuple(right), mult

class Sym(HopfAlgebra):
    """Symmetric functions; subclasses fix the basis."""
    name = "sym"
    kind = "partition"
    basis_name = "m"

    def basis(self, n):
        return integer_partitions(n)

    def product_on_basis(self, a, b):
        if self.basis_name in ("e", "h", "p"):
            return self.monomial(_partition(a + b))
        return multiply(self.monomial(a), self.monomial(b))

    def coproduct_on_basis(self, a):
        result = self.tensor_zero()
        if self.basis_name in ("m", "p"):
            for left, right, mult in _sub_multisets(a):
                weight = 1 if self.basis_name == "m" else mult
                result = result + self.tensor_monomial(left, right, weight)
            return result
        if self.basis_name in ("e", "h"):
            for split in itertools.product(*[range(part + 1) for part in a]):
                left = _partition(split)
                right = _partition(part - i for part, i in zip(a, split))
                result = result + self.tensor_monomial(left, right)
            return result
        for (left, right), c in Sym().coproduct(convert(self.monomial(a), "m")).terms.items():
            result = result + tensor(convert(sym("m", left), "s"), convert(sym("m", right), "s")) * c
        return result

class SymM(Sym):
    basis_name = "m"

class SymE(Sym):
    basis_name = "e"

class SymH(Sym):
    basis_name = "h"

class SymP(Sym):
    basis_name = "p"

class SymS(Sym):
    basis_name = "s"

def algebra_for(basis):
    _check_basis(basis)
    return {"m": SymM, "e": SymE, "h": SymH, "p": SymP, "s": SymS}[basis]()
