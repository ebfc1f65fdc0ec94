"""Tridendriform splitting of the SMQSym product and the bidendriform
coproduct halves.

Every augmented-shuffle term is classified by where the lowest occupied
row of the result gets its letters: writing the top word of the result
as w = x.y with |x| the size of the left operand, the term goes to
prec when max(y) < max(x), to circ when they agree, and to succ when
max(y) > max(x).  The coproduct halves split the proper cuts by which
block holds the maximal letter.
"""

from . import smq
from .freemodule import (
    Element,
    Tensor,
    bilinear,
    one,
    tensor_bimap,
    tensor_of,
)
from .matrices import to_biword


def _classify(P, Q):
    """Yield (term, sign) with sign the comparison of max(y) against max(x)."""
    cut = P.n
    for R in smq._product_support(P, Q):
        top = to_biword(R).top
        mx = max(top[:cut], default=0)
        my = max(top[cut:], default=0)
        yield R, (my > mx) - (my < mx)


def _part(P, Q, wanted):
    if P.is_unit() or Q.is_unit():
        raise ValueError("dendriform parts are undefined on the unit")
    return Element((R, one) for R, sign in _classify(P, Q) if sign == wanted)


def prec(P, Q):
    """Terms whose lowest occupied row is fed by the left operand only."""
    return _part(P, Q, -1)


def circ(P, Q):
    """Terms whose lowest occupied row is fed by both operands."""
    return _part(P, Q, 0)


def succ(P, Q):
    """Terms whose lowest occupied row is fed by the right operand only."""
    return _part(P, Q, +1)


def _max_in_top_rows(A, k):
    return any(A.n in cell for row in A.rows[:k] for cell in row)


def _half_coproduct(A, keep_max_on_top):
    if A.n < 1:
        raise ValueError("coproduct halves are undefined on the unit")
    terms = smq._coproduct_terms(A)
    out = []
    for k in range(1, A.height):  # proper cuts only
        if _max_in_top_rows(A, k) == keep_max_on_top:
            out.append((terms[k], one))
    return Tensor(out)


def delta_ll(A):
    """Proper coproduct cuts whose top block holds the maximal letter."""
    return _half_coproduct(A, True)


def delta_gg(A):
    """Proper coproduct cuts whose bottom block holds the maximal letter."""
    return _half_coproduct(A, False)


def proper_coproduct(A):
    """Coproduct with the two trivial cuts removed."""
    terms = smq._coproduct_terms(A)
    return Tensor((pair, one) for pair in terms[1 : len(terms) - 1])


# ---------------------------------------------------------------------------
# Axiom sweeps.  All operations below act on Elements (bilinear lifts).


def _mul(x, y):
    return bilinear(smq.product, x, y)


def _prec(x, y):
    return bilinear(prec, x, y)


def _circ(x, y):
    return bilinear(circ, x, y)


def _succ(x, y):
    return bilinear(succ, x, y)


TRIDENDRIFORM_RELATIONS = (
    ("(x<y)<z = x<(y.z)", lambda x, y, z: _prec(_prec(x, y), z),
     lambda x, y, z: _prec(x, _mul(y, z))),
    ("(x>y)<z = x>(y<z)", lambda x, y, z: _prec(_succ(x, y), z),
     lambda x, y, z: _succ(x, _prec(y, z))),
    ("(x.y)>z = x>(y>z)", lambda x, y, z: _succ(_mul(x, y), z),
     lambda x, y, z: _succ(x, _succ(y, z))),
    ("(x>y)oz = x>(yoz)", lambda x, y, z: _circ(_succ(x, y), z),
     lambda x, y, z: _succ(x, _circ(y, z))),
    ("(x<y)oz = xo(y>z)", lambda x, y, z: _circ(_prec(x, y), z),
     lambda x, y, z: _circ(x, _succ(y, z))),
    ("(xoy)<z = xo(y<z)", lambda x, y, z: _prec(_circ(x, y), z),
     lambda x, y, z: _circ(x, _prec(y, z))),
    ("(xoy)oz = xo(yoz)", lambda x, y, z: _circ(_circ(x, y), z),
     lambda x, y, z: _circ(x, _circ(y, z))),
)


def _graded_basis(bound):
    from .matrices import set_packed_matrices

    return [
        M for n in range(1, bound + 1) for M in set_packed_matrices(n)
    ]


def check_tridendriform(bound):
    """Verify the seven tridendriform relations and the splitting identity
    prec + circ + succ = product, exhaustively on basis triples (pairs for
    the splitting) of total grade <= bound.  Returns (name, passed,
    detail) report lines."""
    basis = _graded_basis(bound - 2)
    triples = [
        (a, b, c)
        for a in basis
        for b in basis
        for c in basis
        if a.n + b.n + c.n <= bound
    ]
    results = []
    for name, lhs, rhs in TRIDENDRIFORM_RELATIONS:
        bad = None
        for a, b, c in triples:
            x, y, z = Element.basis(a), Element.basis(b), Element.basis(c)
            if lhs(x, y, z) != rhs(x, y, z):
                bad = "counterexample (%s, %s, %s)" % (a, b, c)
                break
        results.append((name, bad is None, bad or "%d triples" % len(triples)))

    pair_basis = _graded_basis(bound - 1)
    bad = None
    checked = 0
    for a in pair_basis:
        for b in pair_basis:
            if a.n + b.n > bound:
                continue
            checked += 1
            total = prec(a, b) + circ(a, b) + succ(a, b)
            if total != smq.product(a, b):
                bad = "counterexample (%s, %s)" % (a, b)
                break
        if bad:
            break
    results.append(
        ("x<y + xoy + x>y = x.y", bad is None, bad or "%d pairs" % checked)
    )
    return results


def _delta_ll_elt(x):
    out = Tensor()
    for key, c in x.terms():
        out = out + delta_ll(key) * c
    return out


def _delta_gg_elt(x):
    out = Tensor()
    for key, c in x.terms():
        out = out + delta_gg(key) * c
    return out


def _proper_elt(x):
    out = Tensor()
    for key, c in x.terms():
        out = out + proper_coproduct(key) * c
    return out


def bidendriform_sides(a, b):
    """Both sides of the printed half-coproduct/half-product relation

        Delta_gg(a < b) = a'b'_gg (x) a'' < b''_gg
                        + a' (x) a'' < b
                        + b'_gg (x) a < b''_gg

    with (a', a'') running over the proper coproduct of a and
    (b'_gg, b''_gg) over Delta_gg(b), products extended bilinearly.
    """
    x, y = Element.basis(a), Element.basis(b)
    lhs = _delta_gg_elt(_prec(x, y))

    da, dgb = proper_coproduct(a), delta_gg(b)
    rhs = tensor_bimap(da, dgb, smq.product, prec)
    for (a1, a2), c in da.terms():
        rhs = rhs + tensor_of(Element.basis(a1), prec(a2, b)) * c
    for (b1, b2), c in dgb.terms():
        rhs = rhs + tensor_of(Element.basis(b1), prec(a, b2)) * c
    return lhs, rhs


def check_bidendriform(bound):
    """Verify the printed bidendriform relation and the coproduct splitting
    Delta_ll + Delta_gg = proper coproduct, on grades <= bound."""
    results = []
    pair_basis = _graded_basis(bound - 1)
    bad = None
    checked = 0
    for a in pair_basis:
        for b in pair_basis:
            if a.n + b.n > bound:
                continue
            checked += 1
            lhs, rhs = bidendriform_sides(a, b)
            if lhs != rhs:
                bad = "counterexample (%s, %s)" % (a, b)
                break
        if bad:
            break
    results.append(
        ("Dgg(a<b) three-term expansion", bad is None, bad or "%d pairs" % checked)
    )

    bad = None
    basis = _graded_basis(bound)
    for A in basis:
        if delta_ll(A) + delta_gg(A) != proper_coproduct(A):
            bad = "counterexample %s" % A
            break
    results.append(
        ("Dll + Dgg = proper coproduct", bad is None, bad or "%d elements" % len(basis))
    )
    return results
