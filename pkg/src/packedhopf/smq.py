"""The Hopf algebra SMQSym on set packed matrices.

The product is the augmented shuffle: shift the second factor's labels,
interleave the row sequences of both factors (rows may merge side by
side but never reorder within a factor), and glue the shifted block to
the right.  The coproduct cuts the row sequence at every height,
erases emptied columns and standardizes both blocks.

A realization on bi-words is provided purely as an independent test
oracle: expanding basis elements into sums of bi-words over a truncated
alphabet and multiplying with the concatenate-and-shift product must
reproduce the augmented shuffle.
"""

from functools import lru_cache

from .combinat import PackedWord
from .freemodule import Element, Tensor, one
from .matrices import (
    BiWord,
    SetPackedMatrix,
    erase_empty_columns,
    row_interleavings,
    shift_entries,
    star,
    std,
    to_biword,
)


def unit():
    return SetPackedMatrix.unit()


@lru_cache(maxsize=None)
def _product_support(P, Q):
    """All augmented-shuffle results of P and Q (each occurs exactly once)."""
    shifted = shift_entries(Q, P.n)
    p_width, q_width = P.width, Q.width
    empty_left = (frozenset(),) * p_width
    empty_right = (frozenset(),) * q_width
    out = []
    for p_rows, q_rows, r in row_interleavings(P.height, Q.height):
        p_iter = iter(P.rows)
        q_iter = iter(shifted)
        grid = []
        for i in range(r):
            left = next(p_iter) if i in p_rows else empty_left
            right = next(q_iter) if i in q_rows else empty_right
            grid.append(left + right)
        out.append(SetPackedMatrix(grid))
    return tuple(out)


def product(P, Q):
    """Augmented shuffle product of two basis matrices."""
    return Element((R, one) for R in _product_support(P, Q))


@lru_cache(maxsize=None)
def _coproduct_terms(A):
    terms = []
    for k in range(A.height + 1):
        top = erase_empty_columns(A.rows[:k])
        bottom = erase_empty_columns(A.rows[k:])
        terms.append((std(top), std(bottom)))
    return tuple(terms)


def coproduct(A):
    """Sum over all horizontal cuts of the row list, both blocks
    standardized after erasing their empty columns."""
    return Tensor((pair, one) for pair in _coproduct_terms(A))


def to_word_pair(M):
    """Top and bottom words of the bi-word of M: the image of the basis
    element in graded endomorphisms (a WQ index and an F index)."""
    biword = to_biword(M)
    return PackedWord(biword.top), PackedWord(biword.bottom)


# ---------------------------------------------------------------------------
# Bi-word realization oracle.


def expand_matrix(M, top_size, bottom_size):
    """Sum of all bi-words over the truncated alphabets [1, top_size] x
    [1, bottom_size] whose bi-packing is the bi-word of M."""
    import itertools

    base = to_biword(M)
    out = {}
    for top_values in itertools.combinations(range(1, top_size + 1), M.height):
        for bottom_values in itertools.combinations(range(1, bottom_size + 1), M.width):
            word = BiWord(
                tuple(top_values[a - 1] for a in base.top),
                tuple(bottom_values[a - 1] for a in base.bottom),
            )
            out[word] = out.get(word, 0) + 1
    return out


def expand_element(element, top_size, bottom_size):
    """Bi-word expansion of an Element of SMQSym (integer multiplicities
    scaled by the specialized coefficients, which must be constants)."""
    out = {}
    for M, coeff in element.terms():
        scale = coeff.specialize(1, 1)
        if coeff != scale * one:
            raise ValueError("bi-word expansion needs constant coefficients")
        for word, mult in expand_matrix(M, top_size, bottom_size).items():
            value = out.get(word, 0) + scale * mult
            if value:
                out[word] = value
            else:
                del out[word]
    return out


def star_polynomials(poly1, poly2, top_size, bottom_size):
    """Termwise star product of two bi-word polynomials, projected back to
    the span of bi-words over the truncated alphabets."""
    out = {}
    for w1, c1 in poly1.items():
        for w2, c2 in poly2.items():
            word = star(w1, w2)
            if max(word.top, default=0) > top_size:
                continue
            if max(word.bottom, default=0) > bottom_size:
                continue
            value = out.get(word, 0) + c1 * c2
            if value:
                out[word] = value
            else:
                del out[word]
    return out
