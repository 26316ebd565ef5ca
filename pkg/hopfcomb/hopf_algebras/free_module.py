"""
Finite linear combinations of combinatorial basis labels with exact
coefficients in ZZ or ZZ[q], tensor squares, and a generic checker for the
Hopf algebra axioms.
"""

import itertools

from sympy import Basic
from sympy.polys.domains import ZZ
from sympy.polys.rings import ring, PolyElement

from hopfcomb.exceptions import throw, VerificationError
from hopfcomb.hopf_algebras.combinat import (
    format_composition,
    format_set_partition,
    format_word,
    parse_composition,
    parse_partition,
    parse_set_partition,
    parse_word,
    set_partition_degree,
)
from hopfcomb.utils import get_logger

logger = get_logger(__name__)

QRing, q = ring("q", ZZ)

UNIT = ()

LABEL_KINDS = {
    "word": (len, format_word, parse_word),
    "set-partition": (set_partition_degree, format_set_partition, parse_set_partition),
    "composition": (sum, format_composition, parse_composition),
    "partition": (sum, format_composition, parse_partition),
}

def label_degree(kind, label):
    if isinstance(kind, tuple):
        return tuple(label_degree(k, l) for k, l in zip(kind, label))
    return LABEL_KINDS[kind][0](label)

def format_label(kind, label):
    return LABEL_KINDS[kind][1](label)

def parse_label(kind, text):
    return LABEL_KINDS[kind][2](text)

# Coefficients
# ------------

def as_integer(c):
    """The integer value of a coefficient, or None when it is not an integer."""
    if isinstance(c, PolyElement):
        if not c:
            return 0
        terms = c.terms()
        if len(terms) == 1 and terms[0][0] == (0,):
            return int(terms[0][1])
        return None
    if isinstance(c, Basic) and not c.is_Integer:
        return None
    return int(c)

def q_power(k):
    return QRing.one if k == 0 else q ** k

def specialize(c, value):
    if isinstance(c, PolyElement):
        return sum(int(coeff) * value ** monom[0] for monom, coeff in c.terms())
    return c

def format_coefficient(c):
    value = as_integer(c)
    if value is not None:
        return str(value)
    if not isinstance(c, PolyElement):
        return str(c)
    pieces = []
    for (k,), coeff in sorted(c.terms(), reverse=True):
        coeff = int(coeff)
        mono = "" if k == 0 else ("q" if k == 1 else "q^{0}".format(k))
        if not mono:
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = mono
        else:
            body = "{0}*{1}".format(abs(coeff), mono)
        pieces.append(("-" if coeff < 0 else "+", body))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    return text + "".join(sign + body for sign, body in pieces[1:])

# Linear combinations
# -------------------

class LinComb(object):
    """
    Immutable finite sum of basis labels with nonzero coefficients.

    `basis` and `kind` are strings for elements of an algebra and pairs of
    strings for elements of a tensor square (whose labels are pairs).
    """

    def __init__(self, terms=None, basis="M", kind="word"):
        self.basis = basis
        self.kind = kind
        self.terms = dict((label, c) for label, c in (terms or {}).items() if c)

    @classmethod
    def monomial(cls, label, basis="M", kind="word", coeff=1):
        return cls({label: coeff}, basis, kind)

    def is_tensor(self):
        return isinstance(self.kind, tuple)

    def _check(self, other):
        if self.kind != other.kind or self.basis != other.basis:
            if self.terms and other.terms:
                throw("Cannot mix {0}/{1} with {2}/{3}".format(self.basis, self.kind, other.basis, other.kind))

    def _like(self, terms, other=None):
        source = self if self.terms or other is None else other
        return LinComb(terms, source.basis, source.kind)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        terms = dict(self.terms)
        for label, c in other.terms.items():
            terms[label] = terms.get(label, 0) + c
        return self._like(terms, other)

    __radd__ = __add__

    def __neg__(self):
        return self._like(dict((label, -c) for label, c in self.terms.items()))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, LinComb):
            throw("Use the algebra product to multiply two elements")
        return self._like(dict((label, scalar * c) for label, c in self.terms.items()))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, LinComb):
            return NotImplemented
        if self.terms and other.terms and self.kind != other.kind:
            return False
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def __getitem__(self, label):
        return self.terms.get(label, 0)

    coefficient = __getitem__

    def support(self):
        return [label for label, _ in self.items()]

    def sort_key(self, label):
        if self.is_tensor():
            degrees = label_degree(self.kind, label)
            return (sum(degrees), label)
        return (label_degree(self.kind, label), label)

    def items(self):
        return sorted(self.terms.items(), key=lambda item: self.sort_key(item[0]))

    def map_coefficients(self, fn):
        return self._like(dict((label, fn(c)) for label, c in self.terms.items()))

    def map_labels(self, fn, basis=None, kind=None):
        terms = {}
        for label, c in self.terms.items():
            new = fn(label)
            terms[new] = terms.get(new, 0) + c
        return LinComb(terms, basis or self.basis, kind or self.kind)

    def specialize(self, value):
        return self.map_coefficients(lambda c: specialize(c, value))

    def format_term(self, label):
        if self.is_tensor():
            return " ⊗ ".join(_format_single(b, k, l) for b, k, l in zip(self.basis, self.kind, label))
        return _format_single(self.basis, self.kind, label)

    def __str__(self):
        if not self.terms:
            return "0"
        text = ""
        for label, c in self.items():
            term = self.format_term(label)
            value = as_integer(c)
            if value is None:
                piece, negative = "{0}*{1}".format(_wrap(format_coefficient(c)), term), False
            else:
                negative = value < 0
                piece = term if abs(value) == 1 else "{0}*{1}".format(abs(value), term)
                if term == "1" and abs(value) != 1:
                    piece = str(abs(value))
            if not text:
                text = ("-" if negative else "") + piece
            else:
                text += (" - " if negative else " + ") + piece
        return text

    __repr__ = __str__

    def as_json(self):
        return [{"label": self.format_term(label), "coeff": format_coefficient(c)} for label, c in self.items()]

def _format_single(basis, kind, label):
    if label == UNIT:
        return "1"
    return "{0}[{1}]".format(basis, format_label(kind, label))

def _wrap(text):
    if text.startswith("q") and "+" not in text and "-" not in text:
        return text
    return "(" + text + ")"

def zero(basis="M", kind="word"):
    return LinComb({}, basis, kind)

# Bilinear extensions
# -------------------

def product_bilinear(rule, basis=None, kind=None):
    """Extend a label-level product rule (label, label) -> LinComb bilinearly."""
    def product(x, y):
        result = zero(basis or x.basis, kind or x.kind)
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                result = result + rule(a, b) * (ca * cb)
        return result
    return product

def coproduct_linear(rule, basis=None, kind=None):
    def coproduct(x):
        b = basis or (x.basis, x.basis)
        k = kind or (x.kind, x.kind)
        result = zero(b, k)
        for a, ca in x.terms.items():
            result = result + rule(a) * ca
        return result
    return coproduct

def pairing(x, y):
    """Bilinear extension of <B, B*> = delta on labels of the same kind."""
    if x.terms and y.terms and x.kind != y.kind:
        throw("Cannot pair {0} labels with {1} labels".format(x.kind, y.kind))
    return sum((c * y[label] for label, c in x.terms.items()), 0)

def tensor(x, y):
    terms = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            terms[(a, b)] = terms.get((a, b), 0) + ca * cb
    return LinComb(terms, (x.basis, y.basis), (x.kind, y.kind))

def swap(t):
    return LinComb(dict(((b, a), c) for (a, b), c in t.terms.items()), t.basis[::-1], t.kind[::-1])

def degree_chi(b_degree, a_degree):
    return q_power(b_degree * a_degree)

def trivial_chi(b_degree, a_degree):
    return 1

def twisted_tensor_product(x, y, left_product, right_product=None, chi=degree_chi):
    """
    (a (x) b)(a' (x) b') = chi(b, a') (aa' (x) bb'), with chi(b, a') =
    q^(deg b * deg a') unless another bicharacter is given.
    """
    right_product = right_product or left_product
    result = zero(x.basis, x.kind)
    for (a, b), c1 in x.terms.items():
        for (a2, b2), c2 in y.terms.items():
            weight = chi(label_degree(x.kind[1], b), label_degree(y.kind[0], a2))
            left = left_product(a, a2)
            right = right_product(b, b2)
            result = result + tensor(left, right) * (c1 * c2 * weight)
    return result

def tensor_product(x, y, left_product, right_product=None):
    return twisted_tensor_product(x, y, left_product, right_product, chi=trivial_chi)

def collect(x, classify, members, basis, kind):
    """
    Rewrite x over class sums: the coefficient of class C is the common
    coefficient of the members of C in x. Raises VerificationError when x is
    not constant on some class.
    """
    result = {}
    seen = set()
    for label in x.terms:
        cls = classify(label)
        if cls in seen:
            continue
        seen.add(cls)
        values = set(_key(x[m]) for m in members(cls))
        if len(values) != 1:
            raise VerificationError("{0} is not a combination of class sums: class {1} has coefficients {2}".format(
                x, cls, sorted(values, key=str)))
        result[cls] = x[label]
    return LinComb(result, basis, kind)

def _key(c):
    value = as_integer(c)
    return value if value is not None else format_coefficient(c)

# Algebras
# --------

class HopfAlgebra(object):
    """
    A graded connected bialgebra on a combinatorial basis. Subclasses provide
    `basis(n)`, `product_on_basis(a, b)` and `coproduct_on_basis(a)`; both
    rules return LinComb values.
    """
    name = None
    basis_name = "M"
    kind = "word"
    twisted = False
    dual = None

    def basis(self, n):
        raise NotImplementedError

    def product_on_basis(self, a, b):
        raise NotImplementedError

    def coproduct_on_basis(self, a):
        raise NotImplementedError

    def parse(self, text):
        return parse_label(self.kind, text)

    def degree(self, label):
        return label_degree(self.kind, label)

    def monomial(self, label, coeff=1):
        return LinComb.monomial(label, self.basis_name, self.kind, coeff)

    def element(self, terms):
        return LinComb(terms, self.basis_name, self.kind)

    def zero(self):
        return zero(self.basis_name, self.kind)

    def one(self):
        return self.monomial(UNIT)

    def tensor_zero(self):
        return zero((self.basis_name, self.basis_name), (self.kind, self.kind))

    def tensor_monomial(self, left, right, coeff=1):
        return LinComb({(left, right): coeff}, (self.basis_name, self.basis_name), (self.kind, self.kind))

    def product(self, x, y):
        if x.terms and y.terms:
            self._own(x)
            self._own(y)
        return product_bilinear(self._product_rule, self.basis_name, self.kind)(x, y)

    def _product_rule(self, a, b):
        if a == UNIT:
            return self.monomial(b)
        if b == UNIT:
            return self.monomial(a)
        return self.product_on_basis(a, b)

    def coproduct(self, x):
        self._own(x)
        return coproduct_linear(self.coproduct_on_basis, (self.basis_name, self.basis_name),
                                (self.kind, self.kind))(x)

    def counit(self, x):
        return x[UNIT]

    def tensor_square_product(self, s, t):
        chi = degree_chi if self.twisted else trivial_chi
        return twisted_tensor_product(s, t, self._product_rule, chi=chi)

    def _own(self, x):
        if x.kind != self.kind or x.basis != self.basis_name:
            throw("{0} is not an element of {1} in basis {2}".format(x, self.name, self.basis_name))

def get_dual(algebra):
    dual = algebra.dual
    if dual is None:
        return None
    if isinstance(dual, str):
        from hopfcomb.utils import get_attr
        dual = get_attr(dual)
    return dual()

def _tensor3_left(algebra, t):
    terms = {}
    for (a, b), c in t.terms.items():
        for (a1, a2), c2 in algebra.coproduct_on_basis(a).terms.items() if a != UNIT else [((UNIT, UNIT), 1)]:
            key = (a1, a2, b)
            terms[key] = terms.get(key, 0) + c * c2
    return dict((k, v) for k, v in terms.items() if v)

def _tensor3_right(algebra, t):
    terms = {}
    for (a, b), c in t.terms.items():
        for (b1, b2), c2 in algebra.coproduct_on_basis(b).terms.items() if b != UNIT else [((UNIT, UNIT), 1)]:
            key = (a, b1, b2)
            terms[key] = terms.get(key, 0) + c * c2
    return dict((k, v) for k, v in terms.items() if v)

def compositions_of_degree(max_degree, parts):
    """Tuples of `parts` positive degrees with sum at most max_degree."""
    for degrees in itertools.product(range(1, max_degree + 1), repeat=parts):
        if sum(degrees) <= max_degree:
            yield degrees

def hopf_check(algebra, max_degree, dual=None):
    """
    Exhaustively verify the bialgebra axioms on basis elements of degree at
    most `max_degree`. Returns a report dict; `report["passed"]` is False as
    soon as one axiom fails, and the failing labels are kept in the report.
    """
    if dual is None:
        dual = get_dual(algebra)
    labels = dict((n, list(algebra.basis(n))) for n in range(max_degree + 1))
    report = {
        "algebra": algebra.name,
        "basis": algebra.basis_name,
        "max_degree": max_degree,
        "checks": {},
        "commutative": True,
        "cocommutative": True,
    }

    def record(check, ok, witness):
        entry = report["checks"].setdefault(check, {"passed": True, "checked": 0, "counterexample": None})
        entry["checked"] += 1
        if not ok and entry["passed"]:
            entry["passed"] = False
            entry["counterexample"] = witness
            logger.info("%s fails %s at %s", algebra.name, check, witness)

    fmt = lambda *ls: ", ".join(format_label(algebra.kind, l) if l != UNIT else "1" for l in ls)

    for n in range(max_degree + 1):
        for a in labels[n]:
            x = algebra.monomial(a)
            record("unit", algebra.product(algebra.one(), x) == x and algebra.product(x, algebra.one()) == x, fmt(a))
            delta = algebra.coproduct(x)
            left = algebra.element(dict((r, c) for (l, r), c in delta.terms.items() if l == UNIT))
            right = algebra.element(dict((l, c) for (l, r), c in delta.terms.items() if r == UNIT))
            record("counit", left == x and right == x, fmt(a))
            record("coassociativity", _tensor3_left(algebra, delta) == _tensor3_right(algebra, delta), fmt(a))
            if swap(delta) != delta:
                report["cocommutative"] = False

    logger.debug("%s: unit, counit and coassociativity done", algebra.name)

    for i, j, k in compositions_of_degree(max_degree, 3):
        for a in labels[i]:
            for b in labels[j]:
                ab = algebra.product_on_basis(a, b)
                for c in labels[k]:
                    bc = algebra.product_on_basis(b, c)
                    lhs = algebra.product(ab, algebra.monomial(c))
                    rhs = algebra.product(algebra.monomial(a), bc)
                    record("associativity", lhs == rhs, fmt(a, b, c))

    coproducts = {}

    def delta_of(label):
        if label not in coproducts:
            coproducts[label] = algebra.coproduct(algebra.monomial(label))
        return coproducts[label]

    for i, j in compositions_of_degree(max_degree, 2):
        for a in labels[i]:
            for b in labels[j]:
                ab = algebra.product_on_basis(a, b)
                if i != j or a <= b:
                    if algebra.product_on_basis(b, a) != ab:
                        report["commutative"] = False
                lhs = algebra.coproduct(ab)
                rhs = algebra.tensor_square_product(delta_of(a), delta_of(b))
                record("compatibility", lhs == rhs, fmt(a, b))

    if dual is not None:
        dual_coproducts = {}
        for i, j in compositions_of_degree(max_degree, 2):
            for z in labels[i + j]:
                if z not in dual_coproducts:
                    dual_coproducts[z] = dual.coproduct_on_basis(z)
            for a in labels[i]:
                for b in labels[j]:
                    ab = algebra.product_on_basis(a, b)
                    dual_ab = dual.product_on_basis(a, b)
                    for z in labels[i + j]:
                        ok = ab[z] == dual_coproducts[z][(a, b)] and dual_ab[z] == delta_of(z)[(a, b)]
                        record("duality", ok, fmt(a, b, z))

    report["passed"] = all(entry["passed"] for entry in report["checks"].values())
    return report

def format_report(report):
    lines = ["{0} ({1}), degree <= {2}".format(report["algebra"], report["basis"], report["max_degree"])]
    for check, entry in sorted(report["checks"].items()):
        status = "pass" if entry["passed"] else "FAIL at {0}".format(entry["counterexample"])
        lines.append("{0}: {1} ({2} cases)".format(check, status, entry["checked"]))
    lines.append("commutative: {0}".format("yes" if report["commutative"] else "no"))
    lines.append("cocommutative: {0}".format("yes" if report["cocommutative"] else "no"))
    return "\n".join(lines)
