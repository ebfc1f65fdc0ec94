"""Word quasi-symmetric and word symmetric functions.

WQSym is carried abstractly by its structure constants on packed words:
the product sums over the convolution, the coproduct over max-letter cuts
(equivalently, pairs whose packed shifted shuffle contains the word).
WSym sits inside as sums over the orderings of a set partition's blocks.
The dual F basis is multiplicative with shifted concatenation.
"""

import itertools

from .combinat import (
    PackedWord,
    SetPartition,
    convolution,
    pack,
    setcomp_to_word,
    sp,
    word_to_setcomp,
)
from .freemodule import Element, Tensor, bilinear, collect, one


def wq_product(u, v):
    """Product of basis words: sum over the convolution of u and v."""
    return Element((w, mult) for w, mult in convolution(u, v).items())


def wq_coproduct(w):
    """Coproduct of a basis word: for each cut height k, restrict to the
    letters <= k on the left and pack the letters > k on the right."""
    out = []
    for k in range(w.max() + 1):
        left = PackedWord(a for a in w.letters if a <= k)
        right = pack(a - k for a in w.letters if a > k)
        out.append(((left, right), one))
    return Tensor(out)


def f_product(u, v):
    """Dual-side product: shifted concatenation u . v[max(u)]."""
    shift = u.max()
    return PackedWord(u.letters + tuple(a + shift for a in v.letters))


def block_orderings(partition):
    """All set compositions obtained by ordering the blocks."""
    from .combinat import SetComposition

    return [
        SetComposition(parts) for parts in itertools.permutations(partition.blocks)
    ]


def w_embed(partition):
    """WSym basis element as a sum of WQ words, one per block ordering."""
    return Element(
        (setcomp_to_word(comp), one) for comp in block_orderings(partition)
    )


def _word_partition(word):
    return sp(word_to_setcomp(word))


def _partition_words(partition):
    return [setcomp_to_word(c) for c in block_orderings(partition)]


def w_product(p1, p2):
    """Product of WSym basis elements, computed inside WQSym and regrouped
    on sp-orbits (the regrouping is asserted to be exact)."""
    expanded = bilinear(wq_product, w_embed(p1), w_embed(p2))
    return collect(expanded, _word_partition, _partition_words)
