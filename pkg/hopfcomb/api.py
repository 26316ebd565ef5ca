import json
import re
import traceback

from six import string_types

from hopfcomb.config import _dict, check_degree, get_conf, set_limit
from hopfcomb.exceptions import throw, HopfCombError, UnknownAlgebraError, VerificationError
from hopfcomb.hopf_algebras import stalactic
from hopfcomb.hopf_algebras.combinat import format_set_partition, format_word, parse_word
from hopfcomb.hopf_algebras.free_module import format_coefficient, format_report, get_dual, hopf_check, pairing
from hopfcomb.utils import get_attr, get_hooks, get_logger

logger = get_logger(__name__)

whitelisted = []

def whitelist(fn):
    whitelisted.append(fn)
    return fn

def get_endpoint(name):
    """The whitelisted function called `name`; the command line reaches the api only through these."""
    for fn in whitelisted:
        if fn.__name__ == name:
            return fn
    throw("{0!r} is not an api endpoint".format(name), UnknownAlgebraError)

def log_error(title, error):
    logger.error("%s: %s\n%s", title, error, traceback.format_exc())

def _args(args, **kwargs):
    if args is None:
        args = {}
    if isinstance(args, string_types):
        args = json.loads(args)
    args = _dict(args)
    args.update((k, v) for k, v in kwargs.items() if v is not None)
    # a limit holds for this call only
    set_limit(args.get("limit"))
    return args

def _error(title, e):
    if isinstance(e, VerificationError):
        return {"status": "failed", "message": str(e), "report": e.report}
    if isinstance(e, HopfCombError):
        logger.info("%s: %s", title, e)
        return {"status": "error", "message": str(e), "error_type": type(e).__name__}
    log_error(title, e)
    return {"status": "error", "message": str(e), "error_type": type(e).__name__}

# Algebras and elements
# ---------------------

def get_algebra(algebra, basis=None):
    registry = get_hooks("algebras") or {}
    if algebra not in registry:
        throw("Unknown algebra {0!r}, expected one of {1}".format(algebra, ", ".join(sorted(registry))),
            UnknownAlgebraError)
    bases = registry[algebra]
    if basis is None:
        basis = next(iter(bases))
    if basis not in bases:
        throw("Unknown basis {0!r} of {1}, expected one of {2}".format(basis, algebra, ", ".join(bases)),
            UnknownAlgebraError)
    return get_attr(bases[basis])()

TERM = re.compile(r"^\s*(?:(-?\d+)\s*\*\s*)?(?:([A-Za-z]\w*)\[(.*)\]|(.+?))\s*$")

def parse_element(algebra, text):
    """`133`, `M[133]` or `2*M[133]`, in the basis of `algebra`."""
    match = TERM.match(text)
    if not match:
        throw("Cannot parse element {0!r}".format(text))
    coeff, basis, inner, bare = match.groups()
    if basis is not None and basis != algebra.basis_name:
        throw("{0!r} is not in the {1} basis".format(text, algebra.basis_name))
    label = algebra.parse(inner if basis is not None else bare)
    check_degree(algebra.degree(label), "degree")
    return algebra.monomial(label, int(coeff) if coeff else 1)

def _elements(algebra, items):
    if isinstance(items, string_types):
        items = [items]
    if not items:
        throw("At least one element is required")
    return [parse_element(algebra, text) for text in items]

def _specialize(x, q):
    return x.specialize(int(q)) if q is not None else x

def serialize(x):
    return {"text": str(x), "basis": x.basis, "terms": x.as_json()}

# Endpoints
# ---------

@whitelist
def product(args=None, **kwargs):
    """Product of the elements, left to right."""
    args = _args(args, **kwargs)
    try:
        algebra = get_algebra(args.algebra, args.basis)
        elements = _elements(algebra, args.elements)
        check_degree(sum(algebra.degree(label) for x in elements for label in x.terms), "total degree")
        result = elements[0]
        for x in elements[1:]:
            result = algebra.product(result, x)
        return {"status": "success", "result": serialize(_specialize(result, args.q))}
    except Exception as e:
        return _error("Product Error", e)

@whitelist
def coproduct(args=None, **kwargs):
    args = _args(args, **kwargs)
    try:
        algebra = get_algebra(args.algebra, args.basis)
        elements = _elements(algebra, args.elements)
        if len(elements) != 1:
            throw("coproduct takes a single element")
        result = algebra.coproduct(elements[0])
        return {"status": "success", "result": serialize(_specialize(result, args.q))}
    except Exception as e:
        return _error("Coproduct Error", e)

@whitelist
def pair(args=None, **kwargs):
    """<left, right> with left in the given basis and right in its dual basis."""
    args = _args(args, **kwargs)
    try:
        algebra = get_algebra(args.algebra, args.basis)
        dual = get_dual(algebra)
        if dual is None:
            throw("{0} basis {1} has no registered dual".format(algebra.name, algebra.basis_name))
        elements = args.elements or [args.left, args.right]
        if len(elements) != 2:
            throw("pair takes two elements")
        left, right = parse_element(algebra, elements[0]), parse_element(dual, elements[1])
        return {"status": "success", "result": {"text": format_coefficient(pairing(left, right))}}
    except Exception as e:
        return _error("Pairing Error", e)

@whitelist
def convert(args=None, **kwargs):
    args = _args(args, **kwargs)
    try:
        algebra = get_algebra(args.algebra, args.basis)
        changes = get_hooks("basis_changes") or {}
        if args.algebra not in changes:
            throw("{0} has no basis changes".format(args.algebra), UnknownAlgebraError)
        if not args.to:
            throw("convert needs a target basis")
        change = get_attr(changes[args.algebra])
        result = None
        for x in _elements(algebra, args.elements):
            image = change(x, args.to)
            result = image if result is None else result + image
        return {"status": "success", "result": serialize(_specialize(result, args.q))}
    except Exception as e:
        return _error("Convert Error", e)

@whitelist
def count(args=None, **kwargs):
    args = _args(args, **kwargs)
    try:
        families = get_hooks("count_families") or {}
        if args.family not in families:
            throw("Unknown family {0!r}, expected one of {1}".format(args.family, ", ".join(sorted(families))),
                UnknownAlgebraError)
        entry = families[args.family]
        n = int(args.n)
        if isinstance(entry, tuple):
            value = get_attr(entry[0])(entry[1], n)
        else:
            value = get_attr(entry)(n)
        return {"status": "success", "result": {"text": str(value), "value": int(value)}}
    except Exception as e:
        return _error("Count Error", e)

@whitelist
def insert(args=None, **kwargs):
    """Stalactic insertion of a word: the P and Q symbols and the class representative."""
    args = _args(args, **kwargs)
    try:
        word = args.word
        w = parse_word(word)
        check_degree(len(w), "word length", get_conf().max_word_length)
        alphabetic = word.isalpha()
        P, Q = stalactic.insert(w)
        representative = stalactic.p_symbol_word(P)
        show = "".join(chr(ord("a") + x - 1) for x in representative) if alphabetic else format_word(representative)
        return {
            "status": "success",
            "result": {
                "text": "{0}\nQ = {1}".format(stalactic.format_tableau(P, alphabetic), format_set_partition(Q)),
                "P": show,
                "Q": format_set_partition(Q),
            },
        }
    except Exception as e:
        return _error("Insert Error", e)

@whitelist
def triangle(args=None, **kwargs):
    args = _args(args, **kwargs)
    try:
        if args.name not in (get_hooks("triangles") or []):
            throw("Unknown triangle {0!r}".format(args.name), UnknownAlgebraError)
        rows = stalactic.triangle_rows(args.name, int(args.rows))
        text = "\n".join(" ".join(str(c) for c in row) for row in rows)
        return {"status": "success", "result": {"text": text, "rows": rows}}
    except Exception as e:
        return _error("Triangle Error", e)

def _check_outcome(name, outcome):
    if isinstance(outcome, dict):
        return outcome
    witness = None
    if isinstance(outcome, tuple):
        outcome, witness = outcome
    return {"check": name, "passed": bool(outcome), "counterexample": None if witness is None else str(witness)}

@whitelist
def verify(args=None, **kwargs):
    """Exhaustive bialgebra axioms of an algebra basis, or one of the registered checks."""
    args = _args(args, **kwargs)
    try:
        max_degree = int(args.max_degree or 3)
        check_degree(max_degree, "max degree")
        if args.check:
            checks = get_hooks("checks") or {}
            if args.check not in checks:
                throw("Unknown check {0!r}".format(args.check), UnknownAlgebraError)
            report = _check_outcome(args.check, get_attr(checks[args.check])(max_degree))
            text = "{0}: {1}".format(args.check, "pass" if report["passed"] else
                "FAIL at {0}".format(report["counterexample"]))
        else:
            algebra = get_algebra(args.algebra, args.basis)
            report = hopf_check(algebra, max_degree)
            text = format_report(report)
        if not report["passed"]:
            logger.warning("verification failed:\n%s", text)
            return {"status": "failed", "message": text, "report": report}
        return {"status": "success", "result": {"text": text, "report": report}}
    except Exception as e:
        return _error("Verify Error", e)
