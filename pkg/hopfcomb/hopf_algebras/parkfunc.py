"""
Parking functions inside EQSym.

CPQSym is spanned by the M_p with p a parking function; CCQSym is its
quotient by the span of the M_p with p not nondecreasing. Summing over
labellings gives unlabelled functional graphs, and nondecreasing parking
functions summed over their support forest give an algebra of rooted
forests.
"""

import itertools
from functools import lru_cache

import networkx as nx
from sympy import catalan
from sympy.utilities.iterables import multiset_permutations

from hopfcomb.exceptions import VerificationError
from hopfcomb.hopf_algebras import eqsym
from hopfcomb.hopf_algebras.combinat import (
    enumerate_objects,
    invert_series,
    is_connected,
    is_nondecreasing,
    is_parking,
    shifted_concat,
)
from hopfcomb.hopf_algebras.free_module import HopfAlgebra, collect
from hopfcomb.utils import get_logger

logger = get_logger(__name__)

# CPQSym
# ------

class CPQSym(eqsym.EQSym):
    name = "cpqsym"
    basis_name = "Mpa"
    family = "parking"
    dual = None

def product_Mpa(p, p2):
    return CPQSym().product(CPQSym().monomial(p), CPQSym().monomial(p2))

def coproduct_Mpa(p):
    return CPQSym().coproduct(CPQSym().monomial(p))

def parking_closure_check(max_degree):
    """Every term of M_p M_p' is a parking function, total degree <= max_degree."""
    for n in range(1, max_degree):
        for m in range(1, max_degree - n + 1):
            for p in enumerate_objects("parking", n):
                for p2 in enumerate_objects("parking", m):
                    if not all(is_parking(h) for h in eqsym.structure_constants(p, p2)):
                        return False, (p, p2)
    return True, None

# Functional graphs up to relabelling
# -----------------------------------

def cycle_nodes(f):
    n = len(f)
    nodes = set()
    for x in range(1, n + 1):
        y = x
        for _ in range(n):
            y = f[y - 1]
        # after n steps every walk sits on a cycle
        nodes.add(y)
    closure = set()
    for y in nodes:
        z = y
        while z not in closure:
            closure.add(z)
            z = f[z - 1]
    return closure

def certificate(f):
    """
    Canonical form of the functional graph i -> f(i): every component is a
    cycle of rooted trees, each tree written as a nested parenthesis string
    with sorted children, the cycle rotated to its least reading.
    """
    n = len(f)
    on_cycle = cycle_nodes(f)
    children = dict((v, []) for v in range(1, n + 1))
    for u in range(1, n + 1):
        if u not in on_cycle:
            children[f[u - 1]].append(u)

    def tree(v):
        return "(" + "".join(sorted(tree(c) for c in children[v])) + ")"

    components, seen = [], set()
    for start in sorted(on_cycle):
        if start in seen:
            continue
        sequence, v = [], start
        while v not in seen:
            seen.add(v)
            sequence.append(tree(v))
            v = f[v - 1]
        rotations = [tuple(sequence[i:] + sequence[:i]) for i in range(len(sequence))]
        components.append(min(rotations))
    return tuple(sorted(components))

def is_connected_graph(f):
    return len(certificate(f)) == 1

@lru_cache(maxsize=None)
def representatives(n, family="parking"):
    """certificate -> least word of `family` and size n with that functional graph."""
    result = {}
    for f in enumerate_objects(family, n):
        cert = certificate(f)
        if cert not in result or f < result[cert]:
            result[cert] = f
    return result

def unlabelled_project(p):
    """Least parking function with the functional graph of p."""
    reps = representatives(len(p))
    cert = certificate(p)
    if cert not in reps:
        raise VerificationError("No parking function has the functional graph of {0}".format(p))
    return reps[cert]

def unlabelled_count(n):
    return len(representatives(n))

def connected_unlabelled_count(n):
    return sum(1 for cert in representatives(n) if len(cert) == 1)

def euler_transform(counts, prec):
    """Coefficients of prod_k (1 - t^k)^(-counts[k]) up to t^(prec-1)."""
    series = [1] + [0] * (prec - 1)
    for k in range(1, prec):
        for _ in range(counts[k] if k < len(counts) else 0):
            for i in range(k, prec):
                series[i] += series[i - k]
    return series

def polynomial_dimension_check(max_n):
    """Unlabelled graphs are the monomials in the connected ones."""
    connected = [0] + [connected_unlabelled_count(k) for k in range(1, max_n + 1)]
    return euler_transform(connected, max_n + 1) == [unlabelled_count(k) for k in range(max_n + 1)]

def functional_graph(f):
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, len(f) + 1))
    graph.add_edges_from((x, f[x - 1]) for x in range(1, len(f) + 1))
    return graph

def components(f):
    """Node sets of the connected components of the functional graph of f."""
    return sorted(sorted(c) for c in nx.weakly_connected_components(functional_graph(f)))

def certificate_check(n, family="parking"):
    """Two words of size n share a certificate iff their functional graphs are isomorphic."""
    classes = {}
    for f in enumerate_objects(family, n):
        classes.setdefault(certificate(f), []).append(functional_graph(f))
    firsts = [graphs[0] for graphs in classes.values()]
    for i, g in enumerate(firsts):
        for h in firsts[i + 1:]:
            if nx.is_isomorphic(g, h):
                return False, ("merged", g.edges(), h.edges())
    for cert, graphs in classes.items():
        for g in graphs[1:]:
            if not nx.is_isomorphic(graphs[0], g):
                return False, ("split", cert)
    return True, None

def restrict_function(f, support):
    """Standardized restriction of f to a subset stable under f."""
    ranks = dict((x, i) for i, x in enumerate(sorted(support), 1))
    return tuple(ranks[f[x - 1]] for x in sorted(support))

class UnlabelledParkingGraphs(HopfAlgebra):
    """Polynomial algebra on connected unlabelled graphs; labels are the least parking labellings."""
    name = "cpqsym"
    basis_name = "G"
    kind = "word"

    def basis(self, n):
        return sorted(representatives(n).values())

    def product_on_basis(self, a, b):
        return self.monomial(unlabelled_project(shifted_concat(a, b)))

    def coproduct_on_basis(self, a):
        result = self.tensor_zero()
        parts = components(a)
        for mask in itertools.product((0, 1), repeat=len(parts)):
            left = [x for part, side in zip(parts, mask) if side == 0 for x in part]
            right = [x for part, side in zip(parts, mask) if side == 1 for x in part]
            result = result + self.tensor_monomial(unlabelled_project(restrict_function(a, left)),
                                                   unlabelled_project(restrict_function(a, right)))
        return result

def labelling_sum(rep, family="parking"):
    """Sum of the M_f over the words f of `family` with the functional graph of rep."""
    cert = certificate(rep)
    terms = dict((f, 1) for f in enumerate_objects(family, len(rep)) if certificate(f) == cert)
    return eqsym.EQSym().element(terms)

def labelling_closure_check(max_degree, family="endofunctions"):
    """
    Products of labelling sums are combinations of labelling sums, total
    degree <= max_degree. Returns (closed, first failing pair).
    """
    algebra = eqsym.EQSym()
    members = {}

    def members_of(cls):
        return members[cls]

    for n in range(1, max_degree + 1):
        for f in enumerate_objects(family, n):
            members.setdefault(certificate(f), []).append(f)

    reps = dict((cert, min(fs)) for cert, fs in members.items())
    ordered = sorted(reps.values(), key=lambda f: (len(f), f))
    for a in ordered:
        for b in ordered:
            if len(a) + len(b) > max_degree:
                continue
            x = algebra.product(labelling_sum(a, family), labelling_sum(b, family))
            try:
                collect(x, certificate, members_of, "G", "word")
            except VerificationError:
                logger.info("labelling sums of %s and %s do not multiply into labelling sums", a, b)
                return False, (a, b)
    return True, None

# CCQSym and its dual
# -------------------

def nondecreasing_terms(terms):
    return dict((h, c) for h, c in terms.items() if is_nondecreasing(h))

class CCQSym(HopfAlgebra):
    name = "ccqsym"
    basis_name = "M"
    kind = "word"
    dual = "hopfcomb.hopf_algebras.parkfunc.CCQSymDual"

    def basis(self, n):
        return list(enumerate_objects("nondecreasing-parking", n))

    def product_on_basis(self, a, b):
        return self.element(nondecreasing_terms(eqsym.structure_constants(a, b)))

    def coproduct_on_basis(self, h):
        result = self.tensor_zero()
        for f, g in eqsym.cuts(h):
            result = result + self.tensor_monomial(f, g)
        return result

class CCQSymDual(HopfAlgebra):
    name = "ccqsym"
    basis_name = "S"
    kind = "word"
    dual = "hopfcomb.hopf_algebras.parkfunc.CCQSym"

    def basis(self, n):
        return list(enumerate_objects("nondecreasing-parking", n))

    def product_on_basis(self, a, b):
        return self.monomial(shifted_concat(a, b))

    def coproduct_on_basis(self, h):
        result = self.tensor_zero()
        for (f, g), c in eqsym.dual_structure_constants(h).items():
            if is_nondecreasing(f) and is_nondecreasing(g):
                result = result + self.tensor_monomial(f, g, c)
        return result

def ccqsym_product(a, b):
    return CCQSym().product(CCQSym().monomial(a), CCQSym().monomial(b))

def dual_S_class(p):
    """S^p summed over the distinct rearrangements of p, in the dual of CPQSym."""
    return eqsym.ESym().element(dict((tuple(w), 1) for w in multiset_permutations(list(p))))

def ideal_check(max_degree):
    """Products with a label that is not nondecreasing only produce such labels."""
    for n in range(1, max_degree):
        for m in range(1, max_degree - n + 1):
            for p in enumerate_objects("parking", n):
                if is_nondecreasing(p):
                    continue
                for p2 in enumerate_objects("parking", m):
                    for h in itertools.chain(eqsym.structure_constants(p, p2), eqsym.structure_constants(p2, p)):
                        if is_nondecreasing(h):
                            return False, (p, p2)
    return True, None

def connected_nondecreasing_count(n):
    return sum(1 for p in enumerate_objects("nondecreasing-parking", n) if is_connected(p))

def catalan_freeness_check(max_n):
    """Catalan numbers are the coefficients of 1/(1 - G(t)), G counting connected labels."""
    generators = [1] + [-connected_nondecreasing_count(k) for k in range(1, max_n + 1)]
    return invert_series(generators, max_n + 1) == [int(catalan(k)) for k in range(max_n + 1)]

def find_rearrangement_counterexample(max_degree):
    """
    Look for rearrangement sums whose product is not a combination of
    rearrangement sums. Returns (a, b) as nondecreasing labels, or None.
    """
    algebra = CPQSym()

    def rearrangements(p):
        return [q for q in enumerate_objects("parking", len(p)) if tuple(sorted(q)) == p]

    for n in range(1, max_degree):
        for m in range(1, max_degree - n + 1):
            for a in enumerate_objects("nondecreasing-parking", n):
                for b in enumerate_objects("nondecreasing-parking", m):
                    x = algebra.product(algebra.element(dict((p, 1) for p in rearrangements(a))),
                                        algebra.element(dict((p, 1) for p in rearrangements(b))))
                    try:
                        collect(x, lambda h: tuple(sorted(h)), rearrangements, "R", "word")
                    except VerificationError:
                        logger.info("rearrangement sums of %s and %s are not closed", a, b)
                        return a, b
    return None

# Rooted forests
# --------------

def support_forest(p):
    """Canonical string of the rooted forest i -> p(i), roots at the loops."""
    n = len(p)
    children = dict((v, []) for v in range(1, n + 1))
    roots = []
    for i in range(1, n + 1):
        if p[i - 1] == i:
            roots.append(i)
        else:
            children[p[i - 1]].append(i)

    def tree(v):
        return "(" + "".join(sorted(tree(c) for c in children[v])) + ")"

    return tuple(sorted(tree(r) for r in roots))

@lru_cache(maxsize=None)
def forest_members(n):
    members = {}
    for p in enumerate_objects("nondecreasing-parking", n):
        members.setdefault(support_forest(p), []).append(p)
    return members

def forest_label(p):
    """The least nondecreasing parking function with the support forest of p."""
    return min(forest_members(len(p))[support_forest(p)])

def _members_of_label(label):
    return forest_members(len(label))[support_forest(label)]

def forest_sum(label):
    return CCQSym().element(dict((p, 1) for p in _members_of_label(label)))

def _collect_forests(x):
    return collect(x, forest_label, _members_of_label, "MF", "word")

class Forests(HopfAlgebra):
    """M_F, the sum of the M_p of CCQSym with support forest F."""
    name = "forest"
    basis_name = "MF"
    kind = "word"

    def basis(self, n):
        return sorted(min(ps) for ps in forest_members(n).values())

    def product_on_basis(self, a, b):
        return _collect_forests(CCQSym().product(forest_sum(a), forest_sum(b)))

    def coproduct_on_basis(self, a):
        delta = CCQSym().coproduct(forest_sum(a))
        return collect(delta,
                       lambda fg: (forest_label(fg[0]), forest_label(fg[1])),
                       lambda cls: list(itertools.product(_members_of_label(cls[0]), _members_of_label(cls[1]))),
                       (self.basis_name, self.basis_name), (self.kind, self.kind))

def forest_basis_product(a, b):
    return Forests().product(Forests().monomial(forest_label(a)), Forests().monomial(forest_label(b)))

def forest_closure_check(max_degree):
    for n in range(1, max_degree):
        for m in range(1, max_degree - n + 1):
            for a in Forests().basis(n):
                for b in Forests().basis(m):
                    try:
                        Forests().product_on_basis(a, b)
                    except VerificationError:
                        return False, (a, b)
    return True, None
