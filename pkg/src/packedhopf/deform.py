"""Deformed diagram algebras.

mldiag_product is the two-parameter deformed product on words of
multidegrees: merging two letters costs qs to the power of the weight
product, letting a letter of the right word jump over the left costs qc
likewise.  Shifting (prepending zeros to every letter) turns it into the
deformed product of labelled diagrams.  ld_product realizes the same
deformation directly on integer packed matrices: the support is the
augmented shuffle, and each result carries the monomial

    qs^(sum over rows of left-weight * right-weight)
  * qc^(sum over row pairs r < r' of right-weight(r) * left-weight(r'))

where "left" entries of a result row come from the first factor and
"right" entries from the second.  The qc pairing above reproduces the
worked five-term product of the source material; the transposed pairing
(left of r with right of r') is available behind orientation="printed"
for comparison.
"""

from functools import lru_cache

from .combinat import Multidegree
from .freemodule import Element, QPoly, one
from .matrices import IntPackedMatrix, LabelledDiagram, row_interleavings


class MultidegreeWord:
    """Word whose letters are nonzero multidegrees; the column-by-column
    code of a labelled diagram."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        letters = tuple(letters)
        for letter in letters:
            if not isinstance(letter, Multidegree):
                raise TypeError("letters must be Multidegree values")
            if letter.is_zero():
                raise ValueError("letters must have weight >= 1")
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("MultidegreeWord is immutable")

    def __len__(self):
        return len(self.letters)

    def weight(self):
        return sum(letter.weight() for letter in self.letters)

    def white_count(self):
        """Number of white-spot slots: the longest letter."""
        return max((len(letter) for letter in self.letters), default=0)

    def __eq__(self, other):
        return isinstance(other, MultidegreeWord) and self.letters == other.letters

    def __hash__(self):
        return hash(("MultidegreeWord", self.letters))

    def sort_key(self):
        return (
            self.weight(),
            len(self.letters),
            tuple(letter.sort_key() for letter in self.letters),
        )

    def __str__(self):
        if not self.letters:
            return "e"
        return "".join(str(letter) for letter in self.letters)

    def __repr__(self):
        return "MultidegreeWord.parse(%r)" % (str(self),)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in ("", "e"):
            return cls()
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError("expected a word like (2)(1,3,1), got %r" % text)
        groups = text[1:-1].split(")(")
        return cls(Multidegree.parse("(%s)" % g) for g in groups)


def diagram_code(diagram):
    """The multidegree word of a labelled diagram."""
    return MultidegreeWord(diagram.code_word())


@lru_cache(maxsize=None)
def _mldiag(u, v):
    if not u.letters:
        return Element.basis(v)
    if not v.letters:
        return Element.basis(u)
    alpha, u_rest = u.letters[0], MultidegreeWord(u.letters[1:])
    beta, v_rest = v.letters[0], MultidegreeWord(v.letters[1:])
    wa, wb = alpha.weight(), beta.weight()
    wu_rest = u_rest.weight()

    def prepend(letter, element):
        return Element(
            (MultidegreeWord((letter,) + w.letters), c) for w, c in element.terms()
        )

    keep_left = prepend(alpha, _mldiag(u_rest, v))
    jump_right = prepend(beta, _mldiag(u, v_rest)) * QPoly.monomial(
        1, (wa + wu_rest) * wb, 0
    )
    merge = prepend(alpha + beta, _mldiag(u_rest, v_rest)) * QPoly.monomial(
        1, wu_rest * wb, wa * wb
    )
    return keep_left + jump_right + merge


def mldiag_product(u, v):
    """Deformed product on multidegree words, with the empty word as unit."""
    return _mldiag(u, v)


def shift_word(word, n):
    """Insert n zeros on the left of every letter."""
    return MultidegreeWord(letter.shifted(n) for letter in word.letters)


def shifted_product(u, v):
    """The deformed diagram product: shift v by the white count of u."""
    return mldiag_product(u, shift_word(v, u.white_count()))


def ldiag_product(d1, d2):
    """Shifted concatenation of labelled diagrams: place the second
    diagram's spots after the first's, i.e. a block-diagonal weight grid."""
    if d1.white_count == 0:
        return d2
    if d2.white_count == 0:
        return d1
    left_pad = (0,) * d2.black_count
    right_pad = (0,) * d1.black_count
    rows = [row + left_pad for row in d1.weights]
    rows += [right_pad + row for row in d2.weights]
    return LabelledDiagram(rows)


def _row_weights(row, split):
    return sum(row[:split]), sum(row[split:])


def ld_product(A, B, orientation="example"):
    """Two-parameter deformation of the packed-matrix product.

    The support is the augmented shuffle of A and B; each result matrix
    keeps track of which columns came from A (left block) and from B
    (right block) and carries a single monomial coefficient, computed from
    the row weights of the two blocks.  orientation="example" pairs the
    right weight of an earlier row with the left weight of a later row in
    the qc exponent (matching the worked five-term product);
    orientation="printed" pairs them the other way around.
    """
    if orientation not in ("example", "printed"):
        raise ValueError("orientation must be 'example' or 'printed'")
    a_width, b_width = A.width, B.width
    empty_left = (0,) * a_width
    empty_right = (0,) * b_width
    terms = []
    for a_rows, b_rows, r in row_interleavings(A.height, B.height):
        a_iter = iter(A.rows)
        b_iter = iter(B.rows)
        grid = []
        for i in range(r):
            left = next(a_iter) if i in a_rows else empty_left
            right = next(b_iter) if i in b_rows else empty_right
            grid.append(left + right)
        weights = [_row_weights(row, a_width) for row in grid]
        qs_power = sum(lw * rw for lw, rw in weights)
        qc_power = 0
        for i in range(r):
            for j in range(i + 1, r):
                if orientation == "example":
                    qc_power += weights[i][1] * weights[j][0]
                else:
                    qc_power += weights[i][0] * weights[j][1]
        terms.append(
            (IntPackedMatrix(grid), QPoly.monomial(1, qc_power, qs_power))
        )
    return Element(terms)
