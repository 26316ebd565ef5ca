"""
SGQSym, the commutative Hopf algebra of permutations, its dual SGSym, and
the structures sitting inside or above it:

- PiQSym (basis upi, set partitions) and its dual WSym (bases Mw and Sw),
- the QSym image spanned by the uq_I and the Sym image spanned by the ul_l,
- the quotient of WSym by K(pi) (basis V) and the Bell polynomials.
"""

import itertools
from collections import Counter
from functools import lru_cache

from sympy import Symbol, exp, expand, factorial, series
from sympy.utilities.iterables import multiset_partitions

from hopfcomb.exceptions import throw
from hopfcomb.hopf_algebras import eqsym
from hopfcomb.hopf_algebras.combinat import (
    canonical_set_partition,
    compose,
    compositions,
    cycle_decomposition,
    cycle_type,
    enumerate_objects,
    from_cycles,
    integer_partitions,
    inversions,
    multiplicities,
    ordered_cycle_type,
    partial_matchings,
    relabel_cycles,
    restrict,
    set_partition_of_word,
    set_partition_type,
    shift,
    shifted_concat,
    shuffle_compositions,
    standardize,
    standardize_set_partition,
    z_lambda,
)
from hopfcomb.hopf_algebras.free_module import HopfAlgebra, LinComb
from hopfcomb.hopf_algebras.symfunc import convert, sym
from hopfcomb.utils import entries, get_logger

logger = get_logger(__name__)

# Products of the M_sigma
# -----------------------

def product_by_conjugation(alpha, beta):
    return dict(eqsym.structure_constants(alpha, beta))

@lru_cache(maxsize=None)
def product_by_splitting(alpha, beta):
    """Move the cycles of alpha onto an n-subset A of [n+m] and those of beta onto its complement."""
    n, m = len(alpha), len(beta)
    counts = Counter()
    alpha_cycles, beta_cycles = cycle_decomposition(alpha), cycle_decomposition(beta)
    for chosen in itertools.combinations(range(1, n + m + 1), n):
        rest = sorted(set(range(1, n + m + 1)) - set(chosen))
        cycles = relabel_cycles(alpha_cycles, chosen) + relabel_cycles(beta_cycles, rest)
        counts[from_cycles(cycles, n + m)] += 1
    return dict(counts)

def _stable_subsets(gamma, size):
    """Unions of cycles of gamma with `size` elements."""
    cycles = cycle_decomposition(gamma)
    for k in range(len(cycles) + 1):
        for chosen in itertools.combinations(cycles, k):
            support = sorted(entries(chosen))
            if len(support) == size:
                yield support

@lru_cache(maxsize=None)
def product_by_restriction(alpha, beta):
    """Count the splittings of the cycles of gamma whose standardized restrictions are (alpha, beta)."""
    n, m = len(alpha), len(beta)
    counts = {}
    for gamma in enumerate_objects("permutations", n + m):
        count = 0
        for support in _stable_subsets(gamma, n):
            rest = sorted(set(range(1, n + m + 1)) - set(support))
            if restrict(gamma, support) == alpha and restrict(gamma, rest) == beta:
                count += 1
        if count:
            counts[gamma] = count
    return counts

PRODUCT_METHODS = {
    "conjugation": product_by_conjugation,
    "splitting": product_by_splitting,
    "restriction": product_by_restriction,
}

def product_Mperm(alpha, beta, method="conjugation"):
    if method not in PRODUCT_METHODS:
        throw("Unknown product method {0!r}".format(method))
    algebra = SGQSym()
    if not alpha or not beta:
        return algebra.monomial(alpha or beta)
    return algebra.element(PRODUCT_METHODS[method](alpha, beta))

def coproduct_Mperm(sigma):
    return SGQSym().coproduct(SGQSym().monomial(sigma))

@lru_cache(maxsize=None)
def cycle_splittings(gamma):
    """dict (alpha, beta) -> number of ways to split the cycles of gamma with these standardizations."""
    n = len(gamma)
    counts = Counter()
    for cycles in itertools.product((0, 1), repeat=len(cycle_decomposition(gamma))):
        left = sorted(entries(c for c, side in zip(cycle_decomposition(gamma), cycles) if side == 0))
        right = sorted(set(range(1, n + 1)) - set(left))
        counts[(restrict(gamma, left), restrict(gamma, right))] += 1
    return dict(counts)

class SGQSym(eqsym.EQSym):
    name = "sgqsym"
    family = "permutations"
    dual = "hopfcomb.hopf_algebras.sgqsym.SGSym"

class SGSym(HopfAlgebra):
    name = "sgqsym"
    basis_name = "S"
    kind = "word"
    dual = "hopfcomb.hopf_algebras.sgqsym.SGQSym"

    def basis(self, n):
        return enumerate_objects("permutations", n)

    def product_on_basis(self, a, b):
        return self.monomial(shifted_concat(a, b))

    def coproduct_on_basis(self, gamma):
        result = self.tensor_zero()
        for (alpha, beta), c in cycle_splittings(gamma).items():
            result = result + self.tensor_monomial(alpha, beta, c)
        return result

# Circular standardization
# ------------------------

def _as_letters(word):
    if isinstance(word, str):
        return tuple(ord(c) for c in word)
    return tuple(word)

def minimal_rotation(word):
    return min(word[i:] + word[:i] for i in range(len(word)))

def cstd(words):
    """
    Circular standardization of a commutative product of circular words:
    sort the minimal rotations, standardize their concatenation, and read
    the pieces back as cycles.
    """
    rotations = sorted(minimal_rotation(_as_letters(w)) for w in words)
    if any(not w for w in rotations):
        throw("Circular words must be nonempty")
    standard = standardize(tuple(entries(rotations)))
    cycles, start = [], 0
    for w in rotations:
        cycles.append(standard[start:start + len(w)])
        start += len(w)
    return from_cycles(cycles)

# PiQSym and WSym
# ---------------

def relabel_blocks(blocks, support):
    support = sorted(support)
    return tuple(tuple(support[x - 1] for x in b) for b in blocks)

@lru_cache(maxsize=None)
def product_upi(first, second):
    n, m = sum(map(len, first)), sum(map(len, second))
    counts = Counter()
    for chosen in itertools.combinations(range(1, n + m + 1), n):
        rest = sorted(set(range(1, n + m + 1)) - set(chosen))
        counts[canonical_set_partition(relabel_blocks(first, chosen) + relabel_blocks(second, rest))] += 1
    return dict(counts)

def noncrossing_cuts(blocks):
    """Pairs (left, right) cutting a set partition between k and k+1 without splitting a block."""
    n = sum(map(len, blocks))
    result = []
    for k in range(n + 1):
        if all(max(b) <= k or min(b) > k for b in blocks):
            left = tuple(b for b in blocks if max(b) <= k)
            right = tuple(tuple(x - k for x in b) for b in blocks if min(b) > k)
            result.append((left, right))
    return result

def block_splittings(blocks):
    counts = Counter()
    for sides in itertools.product((0, 1), repeat=len(blocks)):
        left = [b for b, side in zip(blocks, sides) if side == 0]
        right = [b for b, side in zip(blocks, sides) if side == 1]
        counts[(standardize_set_partition(left), standardize_set_partition(right))] += 1
    return dict(counts)

def shifted_union(first, second):
    n = sum(map(len, first))
    return canonical_set_partition(first + tuple(shift(b, n) for b in second))

def product_Mw(first, second):
    """Words of the two orbits concatenated: blocks of the second factor may merge with blocks of the first."""
    n = sum(map(len, first))
    shifted = tuple(shift(b, n) for b in second)
    result = {}
    for matching in partial_matchings(first, shifted):
        merged = [a + b for a, b in matching]
        used = set(entries(merged))
        blocks = merged + [b for b in first + shifted if not used.intersection(b)]
        label = canonical_set_partition(blocks)
        result[label] = result.get(label, 0) + 1
    return result

def coarsenings(blocks):
    """Set partitions obtained by merging blocks."""
    if not blocks:
        return [()]
    result = []
    for grouping in multiset_partitions(list(range(len(blocks)))):
        result.append(canonical_set_partition(tuple(entries(blocks[i] for i in group)) for group in grouping))
    return result

def upi_to_M(blocks):
    """upi_pi as the sum of the M_sigma with csupp(sigma) = pi."""
    n = sum(map(len, blocks))
    terms = {}
    for tails in itertools.product(*[itertools.permutations(b[1:]) for b in blocks]):
        terms[from_cycles([(b[0],) + tail for b, tail in zip(blocks, tails)], n)] = 1
    return SGQSym().element(terms)

class PiQSym(HopfAlgebra):
    name = "piqsym"
    basis_name = "upi"
    kind = "set-partition"
    dual = "hopfcomb.hopf_algebras.sgqsym.WSymCoarse"

    def basis(self, n):
        return enumerate_objects("set-partitions", n)

    def product_on_basis(self, a, b):
        return self.element(product_upi(a, b))

    def coproduct_on_basis(self, a):
        result = self.tensor_zero()
        for left, right in noncrossing_cuts(a):
            result = result + self.tensor_monomial(left, right)
        return result

class WSym(HopfAlgebra):
    name = "wsym"
    basis_name = "Mw"
    kind = "set-partition"

    def basis(self, n):
        return enumerate_objects("set-partitions", n)

    def product_on_basis(self, a, b):
        return self.element(product_Mw(a, b))

    def coproduct_on_basis(self, a):
        result = self.tensor_zero()
        for (left, right), c in block_splittings(a).items():
            result = result + self.tensor_monomial(left, right, c)
        return result

class WSymCoarse(WSym):
    """Sw_pi = sum of the Mw over the coarsenings of pi; these multiply by shifted union."""
    basis_name = "Sw"
    dual = "hopfcomb.hopf_algebras.sgqsym.PiQSym"

    def product_on_basis(self, a, b):
        return self.monomial(shifted_union(a, b))

def coarse_to_Mw(x):
    terms = {}
    for label, c in x.terms.items():
        for coarser in coarsenings(label):
            terms[coarser] = terms.get(coarser, 0) + c
    return WSym().element(terms)

def wsym_realize(blocks, letters):
    """Mw_pi on an alphabet of `letters` letters: the words whose kernel is pi."""
    n = sum(map(len, blocks))
    return Counter(w for w in itertools.product(range(1, letters + 1), repeat=n)
                   if set_partition_of_word(w) == blocks)

def wsym_oracle_check(first, second, letters=None):
    """Mw products against concatenation of realized words, regrouped by kernel."""
    n = sum(map(len, first)) + sum(map(len, second))
    letters = letters or n
    words = Counter()
    for u, cu in wsym_realize(first, letters).items():
        for v, cv in wsym_realize(second, letters).items():
            words[u + v] += cu * cv
    expected = Counter()
    for label, c in WSym().product(WSym().monomial(first), WSym().monomial(second)).terms.items():
        for w, k in wsym_realize(label, letters).items():
            expected[w] += c * k
    return words == expected

# QSym and Sym images
# -------------------

def product_uq(first, second):
    return dict(shuffle_compositions(first, second))

def uq_to_M(parts):
    terms = dict((sigma, 1) for sigma in enumerate_objects("permutations", sum(parts))
                 if ordered_cycle_type(sigma) == tuple(parts))
    return SGQSym().element(terms)

def uq_to_upi(parts):
    terms = dict((blocks, 1) for blocks in enumerate_objects("set-partitions", sum(parts))
                 if set_partition_type(blocks) == tuple(parts))
    return PiQSym().element(terms)

def product_ul(first, second):
    """ul_a ul_b = prod_i binomial(m_i(a) + m_i(b), m_i(a)) ul_{a u b}."""
    ma, mb = multiplicities(first), multiplicities(second)
    coeff = 1
    for part in set(ma) | set(mb):
        coeff *= int(factorial(ma[part] + mb[part]) / (factorial(ma[part]) * factorial(mb[part])))
    return {tuple(sorted(first + second, reverse=True)): coeff}

def ul_to_M(parts):
    terms = dict((sigma, 1) for sigma in enumerate_objects("permutations", sum(parts))
                 if cycle_type(sigma) == tuple(parts))
    return SGQSym().element(terms)

def sub_multiset_pairs(parts):
    seen = set()
    for mask in itertools.product((0, 1), repeat=len(parts)):
        left = tuple(p for p, side in zip(parts, mask) if side == 0)
        right = tuple(p for p, side in zip(parts, mask) if side == 1)
        seen.add((left, right))
    return sorted(seen)

class QSymEmbedded(HopfAlgebra):
    name = "qsym-embed"
    basis_name = "uq"
    kind = "composition"

    def basis(self, n):
        return list(compositions(n))

    def product_on_basis(self, a, b):
        return self.element(product_uq(a, b))

    def coproduct_on_basis(self, a):
        result = self.tensor_zero()
        for k in range(len(a) + 1):
            result = result + self.tensor_monomial(a[:k], a[k:])
        return result

class SymEmbedded(HopfAlgebra):
    name = "sym-embed"
    basis_name = "ul"
    kind = "partition"

    def basis(self, n):
        return integer_partitions(n)

    def product_on_basis(self, a, b):
        return self.element(product_ul(a, b))

    def coproduct_on_basis(self, a):
        result = self.tensor_zero()
        for left, right in sub_multiset_pairs(a):
            result = result + self.tensor_monomial(left, right)
        return result

def j_embed(f):
    """The Hopf embedding of Sym into SGQSym, p_mu / z_mu -> ul_mu, applied to f in any basis."""
    in_p = convert(f, "p")
    return SymEmbedded().element(dict((mu, c * z_lambda(mu)) for mu, c in in_p.terms.items()))

def ul_combination_to_M(x):
    result = SGQSym().zero()
    for parts, c in x.terms.items():
        result = result + c * ul_to_M(parts)
    return result

def trace_power_oracle(n, N):
    """tr(X^n) in the truncated ring with x_ij x_ik = 0, as a Counter of oracle monomials."""
    result = Counter()
    for walk in itertools.product(range(1, N + 1), repeat=n):
        pairs = tuple(sorted((walk[k], walk[(k + 1) % n]) for k in range(n)))
        if len(set(i for i, _ in pairs)) == n:
            result[pairs] += 1
    return result

def immanant_oracle(weight, n, N):
    """sum over i_1 < ... < i_n and sigma of weight(sigma) x_{i_1 i_sigma(1)} ... x_{i_n i_sigma(n)}."""
    result = Counter()
    for sigma in enumerate_objects("permutations", n):
        w = weight(sigma)
        if not w:
            continue
        for monomial, k in eqsym.oracle_realize(sigma, N).items():
            result[monomial] += w * k
    return Counter(dict((m, c) for m, c in result.items() if c))

def sign(sigma):
    return (-1) ** inversions(sigma)

def _exterior_trace(sigma, k):
    """Trace of sigma on the k-th exterior power of the permutation representation."""
    total = 0
    for support in _stable_subsets(sigma, k):
        total += sign(restrict(sigma, support))
    return total

def hook_character(n, k, sigma):
    """chi^{(n-k, 1^k)}(sigma), the k-th exterior power of the standard representation."""
    return sum((-1) ** (k - j) * _exterior_trace(sigma, j) for j in range(k + 1))

def _fixed_subsets(sigma, k):
    return sum(1 for _ in _stable_subsets(sigma, k))

def two_row_character(n, k, sigma):
    """chi^{(n-k, k)}(sigma) = fixed k-subsets minus fixed (k-1)-subsets, k <= n/2."""
    if k == 0:
        return 1
    return _fixed_subsets(sigma, k) - _fixed_subsets(sigma, k - 1)

def _immanant_cases(n):
    """Symmetric functions of degree n whose image under j is the diagonal immanant of a class function."""
    yield sym("e", (n,)), sign
    yield sym("h", (n,)), lambda sigma: 1
    for k in range(n):
        yield sym("s", (n - k,) + (1,) * k), lambda sigma, k=k: hook_character(n, k, sigma)
    for k in range(2, n // 2 + 1):
        yield sym("s", (n - k, k)), lambda sigma, k=k: two_row_character(n, k, sigma)

def identity_check(max_degree, N=None):
    """
    j(p_n) against tr(X^n) and j(e_n), j(h_n), j(s_l) (hook and two-row l)
    against diagonal minors, permanents and immanants, in the truncated
    ring with N variables per row (default n + 1).
    """
    for n in range(1, max_degree + 1):
        size = N or n + 1
        image = eqsym.oracle_expand(ul_combination_to_M(j_embed(sym("p", (n,)))), size)
        if image != trace_power_oracle(n, size):
            return False, ("p", (n,), size)
        for f, weight in _immanant_cases(n):
            image = eqsym.oracle_expand(ul_combination_to_M(j_embed(f)), size)
            if image != immanant_oracle(weight, n, size):
                return False, (f.basis, next(iter(f.terms)), size)
    return True, None

# Subalgebra closure
# ------------------

def is_involution(sigma):
    return compose(sigma, sigma) == tuple(range(1, len(sigma) + 1))

def has_order_dividing(k):
    def predicate(sigma):
        power = tuple(range(1, len(sigma) + 1))
        for _ in range(k):
            power = compose(sigma, power)
        return power == tuple(range(1, len(sigma) + 1))
    return predicate

def is_derangement(sigma):
    return all(x != i for i, x in enumerate(sigma, 1))

def subalgebra_closure_check(predicate, max_degree, algebra=None):
    """
    Whether products and coproducts of basis elements satisfying `predicate`
    only involve such elements. Returns (closed, witness).
    """
    algebra = algebra or SGQSym()
    labels = dict((n, [s for s in algebra.basis(n) if predicate(s)]) for n in range(max_degree + 1))
    for n in range(1, max_degree + 1):
        for sigma in labels[n]:
            for (left, right) in algebra.coproduct_on_basis(sigma).terms:
                if not (predicate(left) and predicate(right)):
                    return False, ("coproduct", sigma, (left, right))
        for m in range(1, max_degree - n + 1):
            for alpha in labels[n]:
                for beta in labels[m]:
                    for gamma in algebra.product_on_basis(alpha, beta).terms:
                        if not predicate(gamma):
                            return False, ("product", (alpha, beta), gamma)
    return True, None

# WSym quotient and Bell polynomials
# ----------------------------------

def wsym_quotient_VI(blocks):
    """The class V_{K(pi)} of Mw_pi."""
    return set_partition_type(blocks)

def interval_partition(parts):
    blocks, start = [], 0
    for p in parts:
        blocks.append(tuple(range(start + 1, start + p + 1)))
        start += p
    return tuple(blocks)

def project_to_V(x):
    return x.map_labels(wsym_quotient_VI, "V", "composition")

class WSymQuotient(HopfAlgebra):
    name = "wsym"
    basis_name = "V"
    kind = "composition"

    def basis(self, n):
        return list(compositions(n))

    def product_on_basis(self, a, b):
        return project_to_V(WSym().element(product_Mw(interval_partition(a), interval_partition(b))))

    def coproduct_on_basis(self, a):
        result = self.tensor_zero()
        for (left, right), c in block_splittings(interval_partition(a)).items():
            result = result + self.tensor_monomial(wsym_quotient_VI(left), wsym_quotient_VI(right), c)
        return result

def quotient_independence_check(max_degree):
    """V-class products and coproducts do not depend on the representatives, degrees up to max_degree."""
    quotient, wsym = WSymQuotient(), WSym()
    for n in range(1, max_degree + 1):
        for a in enumerate_objects("set-partitions", n):
            delta = wsym.coproduct(wsym.monomial(a))
            image = delta.map_labels(lambda pair: (wsym_quotient_VI(pair[0]), wsym_quotient_VI(pair[1])),
                                     ("V", "V"), ("composition", "composition"))
            if image != quotient.coproduct_on_basis(wsym_quotient_VI(a)):
                return False, ("coproduct", a)
            for m in range(1, max_degree - n + 1):
                for b in enumerate_objects("set-partitions", m):
                    lifted = project_to_V(wsym.element(product_Mw(a, b)))
                    if lifted != quotient.product_on_basis(wsym_quotient_VI(a), wsym_quotient_VI(b)):
                        return False, ("product", (a, b))
    return True, None

def commutative_image(x):
    """V_I -> prod_i m_i(l)! m_l with l the sorted parts of I, in the m basis of Sym."""
    result = {}
    for parts, c in x.terms.items():
        shape = tuple(sorted(parts, reverse=True))
        weight = 1
        for mult in multiplicities(shape).values():
            weight *= int(factorial(mult))
        result[shape] = result.get(shape, 0) + c * weight
    return LinComb(result, "m", "partition")

def bell_coefficients(n):
    """c_l with v_1^n = sum c_l v_l, computed in the quotient of WSym."""
    quotient = WSymQuotient()
    power = quotient.one()
    for _ in range(n):
        power = quotient.product(power, quotient.monomial((1,)))
    result = {}
    for parts, c in power.terms.items():
        shape = tuple(sorted(parts, reverse=True))
        result[shape] = result.get(shape, 0) + c
    return result

def bell_polynomial(n, xs=None):
    xs = xs or [Symbol("x{0}".format(k)) for k in range(1, n + 1)]
    total = 0
    for shape, c in bell_coefficients(n).items():
        term = c
        for part in shape:
            term *= xs[part - 1]
        total += term
    return expand(total)

def bell_check(n):
    """B_n from the quotient against n! [t^n] exp(sum_k x_k t^k / k!)."""
    t = Symbol("t")
    xs = [Symbol("x{0}".format(k)) for k in range(1, n + 1)]
    generating = exp(sum(x * t ** k / factorial(k) for k, x in enumerate(xs, 1)))
    expected = expand(series(generating, t, 0, n + 1).removeO().coeff(t, n) * factorial(n))
    return expand(bell_polynomial(n, xs) - expected) == 0

def _linear(label_map):
    def apply(x):
        result = None
        for label, c in x.terms.items():
            image = label_map(label) * c
            result = image if result is None else result + image
        return result if result is not None else SGQSym().zero()
    return apply

BASIS_CHANGES = {
    ("upi", "M"): _linear(upi_to_M),
    ("uq", "M"): _linear(uq_to_M),
    ("uq", "upi"): _linear(uq_to_upi),
    ("ul", "M"): ul_combination_to_M,
    ("Sw", "Mw"): coarse_to_Mw,
    ("Mw", "V"): project_to_V,
}

def change_basis(x, target):
    """Images of the embedded and quotient bases in the bases they map to."""
    if (x.basis, target) not in BASIS_CHANGES:
        throw("No basis change from {0} to {1}".format(x.basis, target))
    return BASIS_CHANGES[(x.basis, target)](x)
