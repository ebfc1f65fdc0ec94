"""The seven algebras derived from SMQSym, and the morphisms between all
eight.

Subalgebras (SMRSym, SMSym, MQSym, MRSym, MSym) are handled by
expand-compute-collect: a basis element expands into the ambient algebra,
the ambient operation is applied, and the result is regrouped into orbit
sums with a uniformity assertion -- the executable form of "stable for
the product".  Quotients (SMCSym, MCSym) are handled as
canonical-representative algebras: compute on a representative and push
every term onto its orbit class.
"""

import itertools
from functools import lru_cache

from . import smq
from .combinat import SetComposition, SetPartition, sp
from .freemodule import (
    Element,
    Tensor,
    apply_linear,
    bilinear,
    collect,
    collect_tensor,
    one,
)
from .matrices import (
    IntPackedMatrix,
    SetPackedMatrix,
    canonical_col_class,
    canonical_row_class,
    canonical_rowcol_class,
    col_orbit,
    from_int_matrix,
    from_setcomp_pair,
    row_orbit,
    setcomp_pair,
    to_int_matrix,
)


def _pair_str(left, right):
    return "(%s,%s)" % (left, right)


class _PairIndex:
    """Basis key made of a row-side and a column-side component."""

    __slots__ = ("row_part", "col_part")
    _row_type = None
    _col_type = None

    def __init__(self, row_part, col_part):
        if not isinstance(row_part, self._row_type) or not isinstance(
            col_part, self._col_type
        ):
            raise TypeError(
                "%s expects (%s, %s)"
                % (
                    type(self).__name__,
                    self._row_type.__name__,
                    self._col_type.__name__,
                )
            )
        if row_part.n != col_part.n:
            raise ValueError("row and column parts cover different ground sets")
        object.__setattr__(self, "row_part", row_part)
        object.__setattr__(self, "col_part", col_part)

    def __setattr__(self, name, value):
        raise AttributeError("%s is immutable" % type(self).__name__)

    @property
    def n(self):
        return self.row_part.n

    def __eq__(self, other):
        return (
            isinstance(other, type(self))
            and self.row_part == other.row_part
            and self.col_part == other.col_part
        )

    def __hash__(self):
        return hash((type(self).__name__, self.row_part, self.col_part))

    def sort_key(self):
        return (self.row_part.sort_key(), self.col_part.sort_key())

    def __str__(self):
        return _pair_str(self.row_part, self.col_part)

    def __repr__(self):
        return "%s.parse(%r)" % (type(self).__name__, str(self))

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError("expected a pair like (rows,cols), got %r" % text)
        from .combinat import _split_top_level

        parts = _split_top_level(text[1:-1], ",")
        if len(parts) != 2:
            raise ValueError("expected two components in %r" % text)
        return cls(cls._row_type.parse(parts[0]), cls._col_type.parse(parts[1]))


class SMRIndex(_PairIndex):
    """Rows up to reordering (a set partition), columns ordered."""

    __slots__ = ()
    _row_type = SetPartition
    _col_type = SetComposition


class SMCIndex(_PairIndex):
    """Rows ordered, columns up to reordering (a set partition)."""

    __slots__ = ()
    _row_type = SetComposition
    _col_type = SetPartition


class SMIndex(_PairIndex):
    """Both rows and columns up to reordering."""

    __slots__ = ()
    _row_type = SetPartition
    _col_type = SetPartition


def _orderings(partition):
    return [SetComposition(parts) for parts in itertools.permutations(partition.blocks)]


def _sorted_composition(partition):
    # canonical ordering of a partition's blocks (ascending minimum)
    return SetComposition(partition.blocks)


# ---------------------------------------------------------------------------
# SMRSym: subalgebra of SMQSym summing over row orders.


def smr_index(M):
    rows, cols = setcomp_pair(M)
    return SMRIndex(sp(rows), cols)


def smr_matrices(index):
    """The matrices in the row-reordering orbit of an index."""
    return [
        from_setcomp_pair(rows, index.col_part)
        for rows in _orderings(index.row_part)
    ]


def smr_expand(index):
    return Element((M, one) for M in smr_matrices(index))


def _collect_smr(element):
    return collect(element, smr_index, smr_matrices)


def smr_product(i, j):
    return _collect_smr(bilinear(smq.product, smr_expand(i), smr_expand(j)))


def smr_coproduct(index):
    expanded = Tensor()
    for M in smr_matrices(index):
        expanded = expanded + smq.coproduct(M)
    return collect_tensor(expanded, smr_index, smr_matrices)


# ---------------------------------------------------------------------------
# SMCSym: quotient of SMQSym forgetting the column order.


def smc_index(M):
    rows, cols = setcomp_pair(M)
    return SMCIndex(rows, sp(cols))


def smc_matrix(index):
    """Canonical representative: columns ordered by ascending minimum."""
    return from_setcomp_pair(index.row_part, _sorted_composition(index.col_part))


def smc_project(element):
    return element.map_basis(smc_index)


def smc_product(i, j):
    return smc_project(smq.product(smc_matrix(i), smc_matrix(j)))


def smc_coproduct(index):
    return smq.coproduct(smc_matrix(index)).map_legs(smc_index, smc_index)


# ---------------------------------------------------------------------------
# SMSym: subalgebra of SMCSym summing over row orders.


def sm_index_of_smc(index):
    return SMIndex(sp(index.row_part), index.col_part)


def sm_smc_indices(index):
    return [SMCIndex(rows, index.col_part) for rows in _orderings(index.row_part)]


def sm_expand(index):
    return Element((i, one) for i in sm_smc_indices(index))


def _collect_sm(element):
    return collect(element, sm_index_of_smc, sm_smc_indices)


def sm_product(i, j):
    return _collect_sm(bilinear(smc_product, sm_expand(i), sm_expand(j)))


def sm_coproduct(index):
    expanded = Tensor()
    for i in sm_smc_indices(index):
        expanded = expanded + smc_coproduct(i)
    return collect_tensor(expanded, sm_index_of_smc, sm_smc_indices)


# ---------------------------------------------------------------------------
# MQSym: the column-standard span of SMQSym, pulled back to integer
# matrices.


def mq_embed(A):
    return from_int_matrix(A)


def _pull_back(element):
    """Pull an Element of SMQSym supported on column-standard matrices back
    to integer matrices (raises if any term leaves the span)."""
    return element.map_basis(to_int_matrix)


def mq_product(A, B):
    return _pull_back(smq.product(mq_embed(A), mq_embed(B)))


def mq_coproduct(A):
    return smq.coproduct(mq_embed(A)).map_legs(to_int_matrix, to_int_matrix)


# ---------------------------------------------------------------------------
# MRSym, MCSym, MSym: integer matrices up to row / column / both
# permutations.


def mr_index(A):
    return canonical_row_class(A)


def mr_expand(index):
    return Element((B, one) for B in row_orbit(index))


def _collect_mr(element):
    return collect(element, mr_index, row_orbit)


def mr_product(i, j):
    return _collect_mr(bilinear(mq_product, mr_expand(i), mr_expand(j)))


def mr_coproduct(index):
    expanded = Tensor()
    for B in row_orbit(index):
        expanded = expanded + mq_coproduct(B)
    return collect_tensor(expanded, mr_index, row_orbit)


def mc_index(A):
    return canonical_col_class(A)


def mc_project(element):
    return element.map_basis(mc_index)


def mc_product(i, j):
    return mc_project(mq_product(i, j))


def mc_coproduct(index):
    return mq_coproduct(index).map_legs(mc_index, mc_index)


def m_index(A):
    return canonical_rowcol_class(A)


def m_mc_indices(index):
    """Distinct column classes inside the row+column orbit."""
    return sorted(
        {mc_index(B) for B in row_orbit(index)}, key=lambda m: m.sort_key()
    )


def m_expand(index):
    return Element((i, one) for i in m_mc_indices(index))


def _collect_m(element):
    return collect(element, m_index, m_mc_indices)


def m_product(i, j):
    return _collect_m(bilinear(mc_product, m_expand(i), m_expand(j)))


def m_coproduct(index):
    expanded = Tensor()
    for i in m_mc_indices(index):
        expanded = expanded + mc_coproduct(i)
    return collect_tensor(expanded, m_index, m_mc_indices)


# ---------------------------------------------------------------------------
# The eight-algebra diagram.
#
# Left cube face (set side), right face (integer side): forget row order,
# forget column order.  The faces connecting the two sides are the
# label-forgetting surjections |.| replacing every set by its cardinality
# (on indices: matrices, orbit classes); the section from_int_matrix goes
# the other way on MQSym.


def cardinality_matrix(M):
    """Forget labels: the integer packed matrix of cell cardinalities."""
    return IntPackedMatrix(tuple(tuple(len(c) for c in row) for row in M.rows))


def smq_to_mq(element):
    return element.map_basis(cardinality_matrix)


def smc_to_mc(index):
    """Column classes of cardinality matrices; representative-independent
    because reordering a set matrix's columns permutes the columns of its
    cardinality matrix."""
    return mc_index(cardinality_matrix(smc_matrix(index)))


def smr_to_mr(index):
    """Push the row-orbit sum through |.| and regroup on row orbits."""
    return _collect_mr(smq_to_mq(smr_expand(index)))


def sm_to_ms(index):
    """Push the row-orbit sum of column classes through |.| and regroup."""
    projected = Element(
        (smc_to_mc(i), c) for i, c in sm_expand(index).terms()
    )
    return _collect_m(projected)


def mr_to_ms(index):
    """Quotient map induced on MRSym by forgetting the column order."""
    return _collect_m(mc_project(mr_expand(index)))


def _forget_rows_smq(M):
    return smr_index(M)


def _forget_cols_smq(M):
    return smc_index(M)


def _forget_cols_smr(i):
    return SMIndex(i.row_part, sp(i.col_part))


def _forget_rows_smc(i):
    return SMIndex(sp(i.row_part), i.col_part)


def diagram_check(grade_bound):
    """Exhaustively check every face of the eight-algebra diagram on basis
    elements of grade <= grade_bound.

    Returns a list of (square name, passed, detail) triples; detail names
    the first offending basis element, or counts the checked cases.
    """
    from .matrices import int_packed_matrices, set_packed_matrices

    set_basis = [M for n in range(grade_bound + 1) for M in set_packed_matrices(n)]
    int_basis = [A for n in range(grade_bound + 1) for A in int_packed_matrices(n)]
    smr_basis = sorted(
        {smr_index(M) for M in set_basis}, key=lambda i: i.sort_key()
    )
    sm_basis = sorted(
        {sm_index_of_smc(smc_index(M)) for M in set_basis},
        key=lambda i: i.sort_key(),
    )
    mr_basis = sorted({mr_index(A) for A in int_basis}, key=lambda a: a.sort_key())

    results = []

    def run(name, domain, lhs, rhs, render=str):
        for x in domain:
            left, right = lhs(x), rhs(x)
            if left != right:
                results.append((name, False, "counterexample %s" % render(x)))
                return
        results.append((name, True, "%d basis elements" % len(domain)))

    # set-side face, forgetful: SMQ -> SMR -> SM  vs  SMQ -> SMC -> SM
    run(
        "SMQSym>SMRSym>SMSym = SMQSym>SMCSym>SMSym",
        set_basis,
        lambda M: _forget_cols_smr(_forget_rows_smq(M)),
        lambda M: _forget_rows_smc(_forget_cols_smq(M)),
    )
    # integer-side face, forgetful
    run(
        "MQSym>MRSym>MSym = MQSym>MCSym>MSym",
        int_basis,
        lambda A: m_index(mr_index(A)),
        lambda A: m_index(mc_index(A)),
    )
    # set-side face, expand/project: SMR -> SMQ -> SMC  vs  SMR -> SM -> SMC
    run(
        "SMRSym>SMQSym>SMCSym = SMRSym>SMSym>SMCSym",
        smr_basis,
        lambda i: smc_project(smr_expand(i)),
        lambda i: sm_expand(_forget_cols_smr(i)),
    )
    # integer-side face, expand/project
    run(
        "MRSym>MQSym>MCSym = MRSym>MSym>MCSym",
        mr_basis,
        lambda i: mc_project(mr_expand(i)),
        lambda i: apply_linear(m_expand, mr_to_ms(i)),
    )
    # connecting face: label forgetting versus the two column quotients
    run(
        "SMQSym>MQSym>MCSym = SMQSym>SMCSym>MCSym",
        set_basis,
        lambda M: mc_index(cardinality_matrix(M)),
        lambda M: smc_to_mc(smc_index(M)),
    )
    # connecting face: label forgetting versus the two row-orbit sums
    run(
        "SMRSym>SMQSym>MQSym = SMRSym>MRSym>MQSym",
        smr_basis,
        lambda i: smq_to_mq(smr_expand(i)),
        lambda i: apply_linear(mr_expand, smr_to_mr(i)),
    )
    # connecting face: the two routes from SMRSym to MSym
    run(
        "SMRSym>MRSym>MSym = SMRSym>SMSym>MSym",
        smr_basis,
        lambda i: apply_linear(mr_to_ms, smr_to_mr(i)),
        lambda i: sm_to_ms(_forget_cols_smr(i)),
    )
    # connecting face: the two routes from SMSym to MCSym
    run(
        "SMSym>SMCSym>MCSym = SMSym>MSym>MCSym",
        sm_basis,
        lambda i: Element(
            (smc_to_mc(j), c) for j, c in sm_expand(i).terms()
        ),
        lambda i: apply_linear(m_expand, sm_to_ms(i)),
    )
    # MQSym splits the label forgetting: embed then forget is the identity
    run(
        "MQSym>SMQSym>MQSym = id",
        int_basis,
        lambda A: cardinality_matrix(mq_embed(A)),
        lambda A: A,
    )
    # and the embedded copy maps onto the same column classes
    run(
        "MQSym>SMQSym>SMCSym>MCSym = MQSym>MCSym",
        int_basis,
        lambda A: smc_to_mc(smc_index(mq_embed(A))),
        lambda A: mc_index(A),
    )
    # grade 0: the unit maps to the unit along every edge
    unit_checks = (
        smr_index(SetPackedMatrix.unit()) == SMRIndex(SetPartition(), SetComposition())
        and smc_index(SetPackedMatrix.unit())
        == SMCIndex(SetComposition(), SetPartition())
        and cardinality_matrix(SetPackedMatrix.unit()) == IntPackedMatrix.unit()
        and mq_embed(IntPackedMatrix.unit()) == SetPackedMatrix.unit()
        and mr_index(IntPackedMatrix.unit()) == IntPackedMatrix.unit()
        and m_index(IntPackedMatrix.unit()) == IntPackedMatrix.unit()
    )
    results.append(("unit maps to unit along every path", unit_checks, ""))
    return results
