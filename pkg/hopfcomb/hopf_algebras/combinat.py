"""
Words, endofunctions, permutations, cycles, set partitions, compositions and
integer partitions, with the enumerators every algebra module is built on.

All objects are plain tuples of positive integers so that they can be used as
dictionary keys and basis labels:

- a word / endofunction / permutation / parking function is ``(w1, ..., wn)``
- a cycle is a tuple starting with its minimum, a cycle set a tuple of cycles
  sorted by minimum
- a set partition is a tuple of increasing blocks sorted by minimum
- a composition or an integer partition is a tuple of parts
"""

import itertools
from collections import Counter

from sympy import QQ, bell, binomial, catalan, factorial
from sympy.polys.rings import ring
from sympy.polys.ring_series import rs_series_inversion
from sympy.functions.combinatorial.numbers import stirling
from sympy.utilities.iterables import multiset_partitions, multiset_permutations, partitions

from hopfcomb.config import check_degree, get_conf
from hopfcomb.exceptions import throw, ResourceLimitError, UnknownAlgebraError
from hopfcomb.utils import entries, get_logger

logger = get_logger(__name__)

KINDS = (
    "endofunctions",
    "permutations",
    "parking",
    "nondecreasing-parking",
    "set-partitions",
    "initial-words",
    "involutions",
)

# Text encodings
# --------------

def parse_word(text):
    if isinstance(text, (tuple, list)):
        letters = tuple(int(x) for x in text)
    else:
        text = text.strip()
        if text in ("", "[]", "()"):
            letters = ()
        elif text.startswith("[") and text.endswith("]"):
            letters = tuple(int(x) for x in text[1:-1].split(","))
        elif "," in text:
            letters = tuple(int(x) for x in text.split(","))
        elif text.isdigit():
            letters = tuple(int(c) for c in text)
        elif text.isalpha() and text.islower():
            letters = tuple(ord(c) - ord("a") + 1 for c in text)
        else:
            throw("Cannot read a word from {0!r}".format(text))
    if any(x < 1 for x in letters):
        throw("Letters must be positive integers, got {0!r}".format(text))
    return letters

def format_word(w):
    if not w:
        return "[]"
    if max(w) <= 9:
        return "".join(str(x) for x in w)
    return "[" + ",".join(str(x) for x in w) + "]"

def parse_cycles(text):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        throw("Cycle notation must look like (1352)(4), got {0!r}".format(text))
    cycles = []
    for chunk in text[1:-1].split(")("):
        if "," in chunk:
            cycles.append(tuple(int(x) for x in chunk.split(",")))
        else:
            cycles.append(tuple(int(c) for c in chunk))
    return canonical_cycle_set(cycles)

def format_cycles(cycles):
    wide = any(x > 9 for x in entries(cycles))
    sep = "," if wide else ""
    return "".join("(" + sep.join(str(x) for x in c) + ")" for c in cycles)

def parse_set_partition(text):
    if isinstance(text, (tuple, list)):
        return canonical_set_partition(text)
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        throw("Set partitions look like {{1,5|2|3,4}}, got {0!r}".format(text))
    body = text[1:-1].strip()
    if not body:
        return ()
    blocks = [tuple(int(x) for x in block.split(",")) for block in body.split("|")]
    return canonical_set_partition(blocks)

def format_set_partition(blocks):
    return "{" + "|".join(",".join(str(x) for x in b) for b in blocks) + "}"

def parse_composition(text):
    if isinstance(text, (tuple, list)):
        parts = tuple(int(x) for x in text)
    else:
        text = text.strip().strip("()[]")
        if not text:
            parts = ()
        elif "," in text:
            parts = tuple(int(x) for x in text.split(","))
        elif text.isdigit():
            parts = tuple(int(c) for c in text)
        else:
            throw("Cannot read a composition from {0!r}".format(text))
    if any(p < 1 for p in parts):
        throw("Parts must be positive, got {0!r}".format(text))
    return parts

def parse_partition(text):
    return tuple(sorted(parse_composition(text), reverse=True))

def format_composition(parts):
    return "(" + ",".join(str(p) for p in parts) + ")"

# Words
# -----

def standardize(w):
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    result = [0] * len(w)
    for rank, i in enumerate(order, 1):
        result[i] = rank
    return tuple(result)

def shift(w, k):
    return tuple(x + k for x in w)

def shifted_concat(f, g):
    return tuple(f) + shift(g, len(f))

def inversions(w):
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])

def descent_set(w):
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])

def descent_composition(w):
    """Composition of len(w) whose partial sums are the descents of w."""
    if not w:
        return ()
    cuts = (0,) + descent_set(w) + (len(w),)
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))

def is_endofunction(w):
    return all(1 <= x <= len(w) for x in w)

def is_permutation(w):
    return sorted(w) == list(range(1, len(w) + 1))

def is_parking(w):
    return all(u <= i for i, u in enumerate(sorted(w), 1))

def is_nondecreasing(w):
    return all(a <= b for a, b in zip(w, w[1:]))

def is_initial(w):
    return set(w) == set(range(1, max(w) + 1)) if w else True

def is_involution(w):
    return all(w[w[i] - 1] == i + 1 for i in range(len(w)))

def cut_points(h):
    """Positions k, 0 < k < n, such that h maps [k] into [k] and the rest above k."""
    n = len(h)
    cuts = []
    prefix_max = 0
    suffix_min = [0] * (n + 1)
    suffix_min[n] = n + 1
    for i in range(n - 1, -1, -1):
        suffix_min[i] = min(h[i], suffix_min[i + 1])
    for k in range(1, n):
        prefix_max = max(prefix_max, h[k - 1])
        if prefix_max <= k and suffix_min[k] > k:
            cuts.append(k)
    return cuts

def connected_factorization(h):
    if not h:
        return []
    bounds = [0] + cut_points(h) + [len(h)]
    return [shift(h[a:b], -a) for a, b in zip(bounds, bounds[1:])]

def is_connected(h):
    return bool(h) and not cut_points(h)

def compose(u, v):
    """(u o v)(i) = u(v(i))."""
    return tuple(u[x - 1] for x in v)

def inverse(sigma):
    result = [0] * len(sigma)
    for i, x in enumerate(sigma, 1):
        result[x - 1] = i
    return tuple(result)

# Shuffles
# --------

def shuffle(u, v):
    """All interleavings of u and v, with multiplicity."""
    n, m = len(u), len(v)
    result = []
    for positions in itertools.combinations(range(n + m), n):
        chosen = set(positions)
        word, iu, iv = [], iter(u), iter(v)
        for i in range(n + m):
            word.append(next(iu) if i in chosen else next(iv))
        result.append(tuple(word))
    return result

def shifted_shuffle(u, v):
    return shuffle(u, shift(v, len(u)))

def shuffle_permutations(n, m):
    """The words of (1..n) shuffled with (n+1..n+m), read as permutations."""
    return shifted_shuffle(tuple(range(1, n + 1)), tuple(range(1, m + 1)))

# Cycles
# ------

def canonical_cycle(c):
    c = tuple(c)
    i = c.index(min(c))
    return c[i:] + c[:i]

def canonical_cycle_set(cycles):
    cycles = [canonical_cycle(c) for c in cycles if c]
    support = list(entries(cycles))
    if len(support) != len(set(support)):
        throw("Cycles {0} have overlapping supports".format(format_cycles(cycles)))
    return tuple(sorted(cycles))

def cycle_decomposition(sigma):
    seen = set()
    cycles = []
    for i in range(1, len(sigma) + 1):
        if i in seen:
            continue
        cycle = [i]
        seen.add(i)
        j = sigma[i - 1]
        while j != i:
            cycle.append(j)
            seen.add(j)
            j = sigma[j - 1]
        cycles.append(tuple(cycle))
    return tuple(cycles)

def from_cycles(cycles, n=None):
    cycles = canonical_cycle_set(cycles)
    support = sorted(entries(cycles))
    if n is None:
        n = len(support)
    if support != list(range(1, n + 1)):
        throw("Cycles {0} do not cover 1..{1}".format(format_cycles(cycles), n))
    sigma = list(range(1, n + 1))
    for c in cycles:
        for idx, a in enumerate(c):
            sigma[a - 1] = c[(idx + 1) % len(c)]
    return tuple(sigma)

def relabel_cycles(cycles, support):
    """Move cycles living on [k] onto the sorted k-element set `support`."""
    support = sorted(support)
    return tuple(tuple(support[x - 1] for x in c) for c in cycles)

def standardize_cycles(cycles):
    """Renumber cycles onto 1..k preserving the relative order of values."""
    ranks = {x: i for i, x in enumerate(sorted(entries(cycles)), 1)}
    return canonical_cycle_set(tuple(ranks[x] for x in c) for c in cycles)

def restrict(sigma, support):
    """Standardized restriction of a permutation to a stable subset."""
    support = sorted(support)
    ranks = {x: i for i, x in enumerate(support, 1)}
    return tuple(ranks[sigma[x - 1]] for x in support)

# Set partitions, compositions, integer partitions
# ------------------------------------------------

def canonical_set_partition(blocks):
    blocks = [tuple(sorted(b)) for b in blocks if b]
    elements = list(entries(blocks))
    if len(elements) != len(set(elements)):
        throw("Blocks of a set partition must be disjoint")
    if sorted(elements) != list(range(1, len(elements) + 1)):
        throw("Blocks of a set partition must cover 1..n")
    return tuple(sorted(blocks))

def set_partition_of_word(w):
    """Positions of equal letters, the kernel of w."""
    blocks = {}
    for i, x in enumerate(w, 1):
        blocks.setdefault(x, []).append(i)
    return canonical_set_partition(blocks.values())

def standardize_set_partition(blocks):
    ranks = {x: i for i, x in enumerate(sorted(entries(blocks)), 1)}
    return canonical_set_partition(tuple(ranks[x] for x in b) for b in blocks)

def set_partition_degree(blocks):
    return sum(len(b) for b in blocks)

def compositions(n):
    if n == 0:
        yield ()
        return
    for k in range(n):
        for cuts in itertools.combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))

def integer_partitions(n):
    """Partitions of n as decreasing tuples, in reverse lexicographic order."""
    result = []
    for p in partitions(n):
        result.append(tuple(sorted(entries([k] * m for k, m in p.items()), reverse=True)))
    return sorted(result, reverse=True)

def multiplicities(parts):
    return Counter(parts)

def z_lambda(parts):
    result = 1
    for part, mult in multiplicities(parts).items():
        result *= part ** mult * int(factorial(mult))
    return result

def shuffle_compositions(first, second):
    """Multiset of compositions in the shuffle of the parts of two compositions."""
    return Counter(shuffle(first, second))

def partial_matchings(left, right):
    """All partial injective pairings of items of `left` with items of `right`, as lists of pairs."""
    for k in range(min(len(left), len(right)) + 1):
        for chosen in itertools.combinations(range(len(left)), k):
            for image in itertools.permutations(range(len(right)), k):
                yield [(left[i], right[j]) for i, j in zip(chosen, image)]

# Statistics
# ----------

def csupp(sigma):
    return canonical_set_partition(set(c) for c in cycle_decomposition(sigma))

def set_partition_type(blocks):
    """Ordered block sizes K(pi), blocks in canonical order."""
    return tuple(len(b) for b in blocks)

def ordered_cycle_type(sigma):
    return set_partition_type(csupp(sigma))

def cycle_type(sigma):
    return tuple(sorted(ordered_cycle_type(sigma), reverse=True))

# Enumeration
# -----------

def expected_count(kind, n):
    kind = kind.replace("_", "-")
    if kind == "endofunctions":
        return n ** n
    if kind == "permutations":
        return int(factorial(n))
    if kind == "parking":
        return (n + 1) ** (n - 1) if n else 1
    if kind == "nondecreasing-parking":
        return int(catalan(n))
    if kind == "set-partitions":
        return int(bell(n))
    if kind == "initial-words":
        return sum(int(factorial(k) * stirling(n, k)) for k in range(n + 1))
    if kind == "involutions":
        return sum(int(binomial(n, 2 * k) * factorial(2 * k) / (2 ** k * factorial(k)))
                   for k in range(n // 2 + 1))
    throw("Unknown enumeration kind {0!r}".format(kind), UnknownAlgebraError)

def nondecreasing_parking(n):
    def extend(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        low = prefix[-1] if prefix else 1
        for x in range(low, len(prefix) + 2):
            for w in extend(prefix + [x]):
                yield w
    return extend([])

def _set_partitions(n):
    if n == 0:
        return [()]
    return sorted(canonical_set_partition(p) for p in multiset_partitions(list(range(1, n + 1))))

def _parking(n):
    words = []
    for base in nondecreasing_parking(n):
        words.extend(tuple(w) for w in multiset_permutations(list(base)))
    return sorted(words)

def enumerate_objects(kind, n, limit=None):
    """Stream every object of `kind` and size n once, in lexicographic order."""
    kind = kind.replace("_", "-")
    if kind not in KINDS:
        throw("Unknown enumeration kind {0!r}".format(kind), UnknownAlgebraError)
    check_degree(n, kind, limit)
    size = expected_count(kind, n)
    if size > get_conf().max_enumeration:
        throw("{0} of size {1} would yield {2} objects".format(kind, n, size), ResourceLimitError)
    logger.debug("enumerating %s objects of kind %s, n=%s", size, kind, n)

    if kind == "endofunctions":
        return itertools.product(range(1, n + 1), repeat=n)
    if kind == "permutations":
        return itertools.permutations(range(1, n + 1))
    if kind == "parking":
        return iter(_parking(n))
    if kind == "nondecreasing-parking":
        return nondecreasing_parking(n)
    if kind == "set-partitions":
        return iter(_set_partitions(n))
    if kind == "initial-words":
        return (w for w in itertools.product(range(1, n + 1), repeat=n) if is_initial(w))
    return (s for s in itertools.permutations(range(1, n + 1)) if is_involution(s))

def count_objects(kind, n):
    return sum(1 for _ in enumerate_objects(kind, n))

# Generating series
# -----------------

SeriesRing, t = ring("t", QQ)

def series_from(coefficients):
    return SeriesRing.from_dict(dict(((k,), c) for k, c in enumerate(coefficients) if c))

def series_coefficients(p, prec):
    """First `prec` coefficients, as ints when integral."""
    result = []
    for k in range(prec):
        c = p.get((k,), QQ.zero)
        result.append(int(c.numerator) if c.denominator == 1 else c)
    return result

def invert_series(coefficients, prec):
    return series_coefficients(rs_series_inversion(series_from(coefficients), t, prec), prec)
