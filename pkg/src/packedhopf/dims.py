"""Dimension formulas and enumeration oracles for the graded components.

The closed route to dim MRSym_n combines the minimum-cover numbers
T(n, k) with the i-colored partition numbers N(n, i); the brute-force
route counts integer packed matrices up to row permutation.  Both are
exposed, together with enumeration-based dimension counts for every
algebra in the eight-node diagram.
"""

from functools import lru_cache
from math import comb

from .combinat import bell, ordered_bell, set_compositions, sp
from .matrices import (
    canonical_col_class,
    canonical_row_class,
    canonical_rowcol_class,
    from_setcomp_pair,
    int_packed_matrices,
    setcomp_pair,
)

ALGEBRAS = (
    "SMQSym",
    "SMRSym",
    "SMCSym",
    "SMSym",
    "MQSym",
    "MRSym",
    "MCSym",
    "MSym",
)


def min_cover_count(n, k):
    """Number of minimum covers of an unlabeled n-set covering k points
    uniquely: the alternating binomial sum."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    # comb(-1, 0) = 1 by convention (only reached at j = k = 0)
    return sum(
        (-1) ** (n - k - j) * (comb(j + k - 1, j) if j + k else 1)
        for j in range(n - k + 1)
    )


def min_cover_table(n_max):
    """The same numbers read off the bivariate generating function
    (1 - x) / ((1 + x)(1 - x - xy)); rows indexed by n, columns by k.

    Independent cross-check of min_cover_count: the denominator gives the
    recurrence C_m = y C_{m-1} + (1 + y) C_{m-2}, and the table is the
    numerator (1 - x) times that inverse series.
    """
    inv = [{0: 1}, {1: 1}]
    for m in range(2, n_max + 1):
        row = {}
        for j, c in inv[m - 1].items():
            row[j + 1] = row.get(j + 1, 0) + c
        for j, c in inv[m - 2].items():
            row[j] = row.get(j, 0) + c
            row[j + 1] = row.get(j + 1, 0) + c
        inv.append(row)
    table = []
    for m in range(n_max + 1):
        row = dict(inv[m])
        if m >= 1:
            for j, c in inv[m - 1].items():
                row[j] = row.get(j, 0) - c
        table.append([row.get(j, 0) for j in range(m + 1)])
    return table


@lru_cache(maxsize=None)
def colored_partition_count(n, colors):
    """Number of multisets of nonzero weight vectors in N^colors with total
    weight n: the coefficient of x^n in the product over k >= 1 of
    (1 - x^k) ^ -binom(colors + k - 1, k)."""
    if n < 0 or colors < 1:
        raise ValueError("need n >= 0 and colors >= 1")
    series = [0] * (n + 1)
    series[0] = 1
    for k in range(1, n + 1):
        exponent = comb(colors + k - 1, k)
        # multiply by (1 - x^k)^-exponent truncated at x^n
        updated = [0] * (n + 1)
        for start, base in enumerate(series):
            if not base:
                continue
            m = 0
            while start + k * m <= n:
                updated[start + k * m] += base * comb(exponent + m - 1, m)
                m += 1
        series = updated
    return series[n]


def colored_partition_count_brute(n, colors):
    """Direct enumeration oracle: multisets of nonzero vectors (tuples of
    length `colors`) whose weights add up to n."""
    vectors = sorted(_vectors_up_to(n, colors), reverse=True)

    def count(remaining, start):
        if remaining == 0:
            return 1
        total = 0
        for idx in range(start, len(vectors)):
            weight = sum(vectors[idx])
            if weight <= remaining:
                total += count(remaining - weight, idx)
        return total

    return count(n, 0)


def _vectors_up_to(n, colors):
    def build(prefix, remaining, slots):
        if slots == 0:
            if any(prefix):
                yield tuple(prefix)
            return
        for value in range(remaining + 1):
            yield from build(prefix + [value], remaining - value, slots - 1)

    yield from build([], n, colors)


def mrsym_dim(n):
    """Closed formula for dim MRSym_n (grade 0 is the unit line)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return sum(
        (-1) ** (n - i)
        * min_cover_count(n + 1, i + 1)
        * colored_partition_count(n, i)
        for i in range(1, n + 2)
    )


def _mqsym_dim_formula(n):
    """Packed integer matrices of degree n by inclusion-exclusion over the
    erased rows and columns."""
    if n == 0:
        return 1
    total = 0
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            for i in range(p + 1):
                for j in range(q + 1):
                    total += (
                        (-1) ** (p - i + q - j)
                        * comb(p, i)
                        * comb(q, j)
                        * comb(n + i * j - 1, n)
                    )
    return total


_FORMULAS = {
    "SMQSym": lambda n: ordered_bell(n) ** 2,
    "SMRSym": lambda n: ordered_bell(n) * bell(n),
    "SMCSym": lambda n: ordered_bell(n) * bell(n),
    "SMSym": lambda n: bell(n) ** 2,
    "MQSym": _mqsym_dim_formula,
    "MRSym": mrsym_dim,
    "MCSym": mrsym_dim,
    "MSym": None,  # no closed formula implemented
}


def formula_dim(algebra, n):
    """Closed-form dimension of the grade-n component, or None when no
    formula is implemented (MSym)."""
    if algebra not in _FORMULAS:
        raise ValueError("unknown algebra %r" % algebra)
    fn = _FORMULAS[algebra]
    return None if fn is None else fn(n)


def _set_matrix_count(n, key):
    if n == 0:
        return 1
    seen = set()
    comps = list(set_compositions(n))
    for rows in comps:
        for cols in comps:
            seen.add(key(from_setcomp_pair(rows, cols)))
    return len(seen)


def _int_matrix_count(n, key):
    return len({key(A) for A in int_packed_matrices(n)})


def enumerate_dim(algebra, n):
    """Brute-force count of the canonical basis indices at grade n, by
    enumerating matrices and deduplicating their orbit invariants."""
    if algebra == "SMQSym":
        return _set_matrix_count(n, lambda M: M)
    if algebra == "SMRSym":
        return _set_matrix_count(
            n, lambda M: (sp(setcomp_pair(M)[0]), setcomp_pair(M)[1])
        )
    if algebra == "SMCSym":
        return _set_matrix_count(
            n, lambda M: (setcomp_pair(M)[0], sp(setcomp_pair(M)[1]))
        )
    if algebra == "SMSym":
        return _set_matrix_count(
            n, lambda M: (sp(setcomp_pair(M)[0]), sp(setcomp_pair(M)[1]))
        )
    if algebra == "MQSym":
        return _int_matrix_count(n, lambda A: A)
    if algebra == "MRSym":
        return _int_matrix_count(n, canonical_row_class)
    if algebra == "MCSym":
        return _int_matrix_count(n, canonical_col_class)
    if algebra == "MSym":
        return _int_matrix_count(n, canonical_rowcol_class)
    raise ValueError("unknown algebra %r" % algebra)


def hilbert(algebra, upto, method="both"):
    """Hilbert series data up to the given grade.

    Returns (formula_values, enumerated_values, agree); either list is
    None when the corresponding method was not requested or, for the
    formula side, not available.
    """
    if method not in ("formula", "enumerate", "both"):
        raise ValueError("method must be formula, enumerate or both")
    formula_values = None
    enumerated = None
    if method in ("formula", "both"):
        if _FORMULAS.get(algebra, "missing") is None:
            if method == "formula":
                raise ValueError("no closed formula for %s" % algebra)
        else:
            formula_values = [formula_dim(algebra, n) for n in range(upto + 1)]
    if method in ("enumerate", "both"):
        enumerated = [enumerate_dim(algebra, n) for n in range(upto + 1)]
    agree = None
    if formula_values is not None and enumerated is not None:
        agree = formula_values == enumerated
    return formula_values, enumerated, agree
