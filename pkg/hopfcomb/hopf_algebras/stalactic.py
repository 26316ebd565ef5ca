"""
The stalactic congruence a w a == a a w on words.

Each class has a canonical representative a1^m1 ... ar^mr with the letters
in order of first occurrence; the insertion below computes it together with
the set partition of positions recording the columns. Class counts on
parking functions, endofunctions and initial words are refined by the number
of distinct letters into the triangles exposed by `triangle`.
"""

import itertools
from collections import Counter, OrderedDict, deque
from functools import lru_cache

from sympy import Symbol, binomial, exp, factorial, integrate, oo, series

from hopfcomb.config import check_degree
from hopfcomb.exceptions import throw, HopfCombError, UnknownAlgebraError
from hopfcomb.hopf_algebras.combinat import (
    canonical_set_partition,
    enumerate_objects,
    integer_partitions,
    shift,
)
from hopfcomb.hopf_algebras.free_module import HopfAlgebra, LinComb
from hopfcomb.hopf_algebras.sgqsym import wsym_realize
from hopfcomb.hopf_algebras.symfunc import convert, derangements, m_eval_at_n, multiply, sym
from hopfcomb.utils import get_logger

logger = get_logger(__name__)

FAMILIES = OrderedDict([
    ("parking", "parking"),
    ("endofunctions", "endofunctions"),
    ("initial_words", "initial-words"),
])

def _family_kind(family):
    family = family.replace("-", "_")
    if family not in FAMILIES:
        throw("Unknown stalactic family {0!r}, expected one of {1}".format(family, ", ".join(FAMILIES)),
              UnknownAlgebraError)
    return family, FAMILIES[family]

# Canonical forms and insertion
# -----------------------------

def canonical_form(w):
    counts = Counter(w)
    result = []
    for letter in OrderedDict.fromkeys(w):
        result.extend([letter] * counts[letter])
    return tuple(result)

def congruent(u, v):
    return canonical_form(u) == canonical_form(v)

def insert(w):
    """
    Scan w from left to right, stacking equal letters in columns. Returns
    P as a tuple of (letter, multiplicity) columns and Q as the set
    partition of positions per column.
    """
    columns = OrderedDict()
    for position, letter in enumerate(w, 1):
        columns.setdefault(letter, []).append(position)
    P = tuple((letter, len(positions)) for letter, positions in columns.items())
    Q = canonical_set_partition(columns.values()) if w else ()
    return P, Q

def p_symbol_word(P):
    return tuple(letter for letter, mult in P for _ in range(mult))

def format_tableau(P, alphabetic=False):
    """Planar picture of P, one row per level of the columns."""
    show = (lambda x: chr(ord("a") + x - 1)) if alphabetic else str
    height = max([mult for _, mult in P] or [0])
    rows = []
    for level in range(height):
        cells = [show(letter) if mult > level else "." for letter, mult in P]
        rows.append(" ".join(cells).rstrip(" ."))
    return "\n".join(rows)

# Rewriting closure
# -----------------

def _moves(w):
    """Words obtained from w by one application of a w a <-> a a w."""
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] != w[j]:
                continue
            # a v a -> a a v
            yield w[:i + 1] + (w[j],) + w[i + 1:j] + w[j + 1:]
            if j == i + 1:
                rest = w[:j] + w[j + 1:]
                for k in range(j + 1, n + 1):
                    # a a v -> a v a
                    yield rest[:k - 1] + (w[j],) + rest[k - 1:]

def rewriting_class(w):
    seen = {tuple(w)}
    queue = deque([tuple(w)])
    while queue:
        u = queue.popleft()
        for v in _moves(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)

def rewriting_classes(n, letters):
    remaining = set(itertools.product(range(1, letters + 1), repeat=n))
    classes = []
    while remaining:
        cls = rewriting_class(min(remaining))
        classes.append(cls)
        remaining -= cls
    return classes

def closure_check(n, letters=3):
    """Rewriting classes of words of length n are exactly the fibers of canonical_form."""
    forms = set()
    classes = rewriting_classes(n, letters)
    for cls in classes:
        keys = set(canonical_form(w) for w in cls)
        if len(keys) != 1:
            logger.info("class of %s has several canonical forms", min(cls))
            return False
        forms |= keys
    return len(forms) == len(classes)

def q_fiber(blocks, letters):
    """The words on `letters` letters whose Q-symbol is `blocks`."""
    n = sum(map(len, blocks))
    return Counter(w for w in itertools.product(range(1, letters + 1), repeat=n) if insert(w)[1] == blocks)

def q_fiber_check(max_degree):
    """Q-symbol fibers on as many letters as the degree are the orbit sums Mw of WSym."""
    for n in range(1, max_degree + 1):
        for blocks in enumerate_objects("set-partitions", n):
            if q_fiber(blocks, n) != wsym_realize(blocks, n):
                return False, blocks
    return True, None

# Counting
# --------

def narayana(n, k):
    return int(binomial(n, k) * binomial(n, k - 1) / n)

def tw(n, k):
    return int(binomial(n, k) * binomial(n - 1, k - 1))

def pascal(n, k):
    return int(binomial(n - 1, k - 1))

BASE_TRIANGLES = {"narayana": narayana, "tw": tw, "pascal": pascal}
SCALED_TRIANGLES = {"lah": "narayana", "endt": "tw", "arr": "pascal"}
TRIANGLE_FAMILIES = {
    "narayana": "parking", "lah": "parking",
    "tw": "endofunctions", "endt": "endofunctions",
    "pascal": "initial_words", "arr": "initial_words",
}

def triangle(name, n):
    """Row n of a triangle, columns k = 1..n; the scaled triangles multiply column k by k!."""
    if n < 1:
        throw("Triangle rows start at n = 1")
    if name in BASE_TRIANGLES:
        return [BASE_TRIANGLES[name](n, k) for k in range(1, n + 1)]
    if name in SCALED_TRIANGLES:
        base = triangle(SCALED_TRIANGLES[name], n)
        return [c * int(factorial(k)) for k, c in enumerate(base, 1)]
    throw("Unknown triangle {0!r}".format(name), UnknownAlgebraError)

def triangle_rows(name, rows):
    return [triangle(name, n) for n in range(1, rows + 1)]

def _check_n(n):
    if n < 1:
        throw("Class counts are defined for n >= 1")
    check_degree(n, "class count size", 9)

def parking_class_count(n):
    _check_n(n)
    return sum(triangle("lah", n))

def endofunction_class_count(n):
    _check_n(n)
    return sum(triangle("endt", n))

def initial_word_class_count(n):
    _check_n(n)
    return sum(triangle("arr", n))

def parking_class_count_by_characters(n):
    """(1/(n+1)) sum over partitions mu of n of m_mu(n+1) l(mu)!."""
    total = sum(m_eval_at_n(mu, n + 1) * int(factorial(len(mu))) for mu in integer_partitions(n))
    return total // (n + 1)

def endofunction_class_count_by_characters(n):
    return sum(m_eval_at_n(mu, n) * int(factorial(len(mu))) for mu in integer_partitions(n))

CLOSED_FORMS = {
    "parking": parking_class_count,
    "endofunctions": endofunction_class_count,
    "initial_words": initial_word_class_count,
}

def class_count(family, n):
    family, _ = _family_kind(family)
    return CLOSED_FORMS[family](n)

def brute_force_classes(family, n):
    _, kind = _family_kind(family)
    return set(canonical_form(w) for w in enumerate_objects(kind, n))

def brute_force_count(family, n):
    return len(brute_force_classes(family, n))

def brute_force_triangle_row(name, n):
    """
    Row n of a triangle by enumeration: stalactic classes (scaled triangles)
    or rearrangement classes (base triangles) counted by their number of
    distinct letters.
    """
    if name not in TRIANGLE_FAMILIES:
        throw("Unknown triangle {0!r}".format(name), UnknownAlgebraError)
    classes = brute_force_classes(TRIANGLE_FAMILIES[name], n)
    if name in BASE_TRIANGLES:
        classes = set(tuple(sorted(w)) for w in classes)
    counts = Counter(len(set(w)) for w in classes)
    return [counts[k] for k in range(1, n + 1)]

z = Symbol("z")

GENERATING_SERIES = {
    # exponential generating series and the offset of its index
    "parking": (exp(z / (1 - z)), 0),
    "endofunctions": (z / (1 - z) * exp(z / (1 - z)), 0),
    "initial_words": (exp(z) / (1 - z) ** 2, -1),
    "c": (exp(-z) / (1 - z) ** 2, 0),
}

def egf_coefficients(name, n):
    """Values at indices 1..n (0..n-1 for "c") read off the exponential generating series."""
    if name not in GENERATING_SERIES:
        throw("No generating series for {0!r}".format(name), UnknownAlgebraError)
    expr, offset = GENERATING_SERIES[name]
    expansion = series(expr, z, 0, n + 2).removeO()
    indices = range(n) if name == "c" else range(1, n + 1)
    return [int(expansion.coeff(z, i + offset) * factorial(i + offset)) for i in indices]

# Generic character
# -----------------

def c_coefficient(k):
    return derangements(k) + derangements(k + 1)

def c_integral(k):
    x = Symbol("x", nonnegative=True)
    return int(integrate(exp(-x) * x * (x - 1) ** k, (x, 0, oo)))

def hook(n, k):
    return (n - k,) + (1,) * k

def generic_character(n):
    """f_n = sum over partitions mu of n of l(mu)! m_mu, in the Schur basis."""
    check_degree(n, "generic character degree", 8)
    f = LinComb(dict((mu, int(factorial(len(mu)))) for mu in integer_partitions(n)), "m", "partition")
    return convert(f, "s")

def generic_character_from_derangements(n):
    """sum_k d_k e_k h_(n-k), in the Schur basis."""
    result = LinComb({}, "s", "partition")
    for k in range(n + 1):
        result = result + derangements(k) * multiply(sym("e", (k,)), sym("h", (n - k,)), "s")
    return result

def c_coefficients(n):
    """Coefficients of f_n on the hooks (n-k, 1^k), k = 0..n-1."""
    f = generic_character(n)
    hooks = [hook(n, k) for k in range(n)]
    stray = [shape for shape in f.terms if shape not in hooks]
    if stray:
        throw("f_{0} has support outside the hooks: {1}".format(n, stray), HopfCombError)
    return [f[shape] for shape in hooks]

# Class algebras
# --------------

class StalacticClasses(HopfAlgebra):
    """
    Classes of a family under the congruence, multiplied by shifted
    concatenation of representatives. Only the product is defined.
    """
    name = "stalactic"
    kind = "word"
    family = None

    def basis(self, n):
        return sorted(brute_force_classes(self.family, n))

    def offset(self, a):
        return len(a)

    def product_on_basis(self, a, b):
        return self.monomial(canonical_form(a + shift(b, self.offset(a))))

    def coproduct_on_basis(self, a):
        throw("The {0} class algebra only carries a product".format(self.basis_name), HopfCombError)

    def project(self, w):
        return self.monomial(canonical_form(w))

class ParkingClasses(StalacticClasses):
    basis_name = "park"
    family = "parking"

class EndofunctionClasses(StalacticClasses):
    basis_name = "endo"
    family = "endofunctions"

class InitialWordClasses(StalacticClasses):
    basis_name = "init"
    family = "initial_words"

    def offset(self, a):
        return max(a) if a else 0

CLASS_ALGEBRAS = {
    "parking": ParkingClasses,
    "endofunctions": EndofunctionClasses,
    "initial_words": InitialWordClasses,
}

def stalactic_class_product(family, u, v):
    family, _ = _family_kind(family)
    algebra = CLASS_ALGEBRAS[family]()
    return algebra.product(algebra.project(u), algebra.project(v))

@lru_cache(maxsize=None)
def _members(family, n):
    _, kind = _family_kind(family)
    members = {}
    for w in enumerate_objects(kind, n):
        members.setdefault(canonical_form(w), []).append(w)
    return members

def well_definedness_check(family, max_degree):
    """Products of all pairs of representatives land in the same class, factors of degree <= max_degree."""
    family, _ = _family_kind(family)
    algebra = CLASS_ALGEBRAS[family]()
    for n in range(1, max_degree + 1):
        for m in range(1, max_degree + 1):
            for a, reps_a in _members(family, n).items():
                for b, reps_b in _members(family, m).items():
                    expected = algebra.product_on_basis(a, b)
                    for u in reps_a:
                        for v in reps_b:
                            if algebra.project(u + shift(v, algebra.offset(u))) != expected:
                                return False, (u, v)
    return True, None
