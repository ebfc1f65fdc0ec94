"""Exact coefficient arithmetic and sparse linear combinations.

Every algebra in this package stores its elements as a finitely supported
map from basis keys to ``QPoly`` coefficients (polynomials in the two
deformation variables qc, qs over the integers; plain integers embed as
constants).  Basis keys are opaque here: they only need to be hashable,
to expose a ``sort_key()`` giving a total order, and to serialize via
``str()``.  Products and coproducts of the individual algebras are plain
functions on basis keys, lifted with the (bi)linear helpers below.
"""

import itertools


class QPoly:
    """Polynomial in the commuting variables qc and qs over the integers.

    Stored as a map (a, b) -> integer coefficient of qc^a * qs^b, with
    zero coefficients stripped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError("negative exponent in coefficient monomial")
            if c:
                key = (a, b)
                c = data.get(key, 0) + c
                if c:
                    data[key] = c
                else:
                    del data[key]
        self._terms = data

    @classmethod
    def const(cls, n):
        return cls({(0, 0): n})

    @classmethod
    def monomial(cls, coeff, a, b):
        return cls({(a, b): coeff})

    def items(self):
        return self._terms.items()

    def is_zero(self):
        return not self._terms

    def is_one(self):
        return self._terms == {(0, 0): 1}

    def is_monomial(self):
        return len(self._terms) == 1

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            c = out.get(key, 0) + c
            if c:
                out[key] = c
            else:
                del out[key]
        result = QPoly.__new__(QPoly)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self):
        result = QPoly.__new__(QPoly)
        result._terms = {k: -c for k, c in self._terms.items()}
        return result

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return QPoly.const(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                c = out.get(key, 0) + c1 * c2
                if c:
                    out[key] = c
                else:
                    del out[key]
        result = QPoly.__new__(QPoly)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def specialize(self, qc_value, qs_value):
        """Evaluate at integer values of qc and qs (a ring homomorphism)."""
        total = 0
        for (a, b), c in self._terms.items():
            total += c * qc_value**a * qs_value**b
        return total

    def __str__(self):
        if not self._terms:
            return "0"
        parts = [_monomial_str(self._terms[k], *k) for k in sorted(self._terms)]
        return _join_signed(parts)

    def __repr__(self):
        return "QPoly(%r)" % (self._terms,)


def _monomial_str(c, a, b):
    factors = []
    if a:
        factors.append("qc" if a == 1 else "qc^%d" % a)
    if b:
        factors.append("qs" if b == 1 else "qs^%d" % b)
    if not factors:
        return str(c)
    if c == 1:
        return "*".join(factors)
    if c == -1:
        return "-" + "*".join(factors)
    return "*".join([str(c)] + factors)


def _join_signed(parts):
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out


zero = QPoly()
one = QPoly.const(1)
qc = QPoly.monomial(1, 1, 0)
qs = QPoly.monomial(1, 0, 1)


def coefficient_prefix(poly):
    """Render poly as a prefix for a printed basis term ('' when poly is 1)."""
    if poly.is_one():
        return ""
    if poly.is_monomial():
        return str(poly) + "*"
    return "(" + str(poly) + ")*"


def _coerce(coeff):
    if isinstance(coeff, int):
        return QPoly.const(coeff)
    if isinstance(coeff, QPoly):
        return coeff
    raise TypeError("coefficient must be an int or QPoly, got %r" % (coeff,))


class _Combination:
    """Shared arithmetic for Element and Tensor (dict key -> QPoly)."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            coeff = _coerce(coeff)
            if coeff:
                coeff = data.get(key, zero) + coeff
                if coeff:
                    data[key] = coeff
                else:
                    del data[key]
        self._terms = data

    @classmethod
    def basis(cls, key, coeff=one):
        return cls(((key, coeff),))

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, key):
        return self._terms.get(key, zero)

    def support(self):
        return sorted(self._terms, key=self._sort_key)

    def terms(self):
        """Term list (key, coefficient) in canonical key order."""
        return [(k, self._terms[k]) for k in self.support()]

    def __iter__(self):
        return iter(self.terms())

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            c = out.get(key, zero) + c
            if c:
                out[key] = c
            else:
                del out[key]
        result = type(self).__new__(type(self))
        result._terms = out
        return result

    def __neg__(self):
        result = type(self).__new__(type(self))
        result._terms = {k: -c for k, c in self._terms.items()}
        return result

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        scalar = _coerce(scalar)
        if not scalar:
            return type(self)()
        out = {}
        for key, c in self._terms.items():
            c = c * scalar
            if c:
                out[key] = c
        result = type(self).__new__(type(self))
        result._terms = out
        return result

    __rmul__ = __mul__

    def specialize(self, qc_value, qs_value):
        """Specialize every coefficient at integer qc, qs values."""
        return type(self)(
            (key, QPoly.const(c.specialize(qc_value, qs_value)))
            for key, c in self._terms.items()
        )

    def __str__(self):
        if not self._terms:
            return "0"
        parts = [coefficient_prefix(c) + self._term_str(k) for k, c in self.terms()]
        return _join_signed(parts)

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self)


class Element(_Combination):
    """Finitely supported QPoly-linear combination of basis keys."""

    __slots__ = ()

    @staticmethod
    def _sort_key(key):
        return key.sort_key()

    @staticmethod
    def _term_str(key):
        return str(key)

    def map_basis(self, fn):
        """Push forward along a basis-key map (merging collisions)."""
        return Element((fn(k), c) for k, c in self._terms.items())


class Tensor(_Combination):
    """Finitely supported combination of ordered pairs of basis keys."""

    __slots__ = ()

    @staticmethod
    def _sort_key(key):
        left, right = key
        return (left.sort_key(), right.sort_key())

    @staticmethod
    def _term_str(key):
        return "%s (x) %s" % key

    def map_legs(self, left_fn, right_fn):
        """Push forward along basis-key maps applied to each tensor leg."""
        return Tensor(
            ((left_fn(k1), right_fn(k2)), c) for (k1, k2), c in self._terms.items()
        )

    def flip(self):
        return Tensor(((k2, k1), c) for (k1, k2), c in self._terms.items())


def apply_linear(fn, element):
    """Extend a basis map fn(key) -> Element by linearity."""
    out = Element()
    for key, c in element._terms.items():
        out = out + fn(key) * c
    return out


def apply_linear_tensor(fn, element):
    """Extend a basis map fn(key) -> Tensor by linearity."""
    out = Tensor()
    for key, c in element._terms.items():
        out = out + fn(key) * c
    return out


def bilinear(fn, x, y):
    """Extend a basis-pair map fn(k1, k2) -> Element bilinearly."""
    out = Element()
    for k1, c1 in x._terms.items():
        for k2, c2 in y._terms.items():
            out = out + fn(k1, k2) * (c1 * c2)
    return out


def tensor_of(x, y):
    """Outer tensor product of two Elements."""
    return Tensor(
        ((k1, k2), c1 * c2)
        for k1, c1 in x._terms.items()
        for k2, c2 in y._terms.items()
    )


def tensor_bimap(t1, t2, left_fn, right_fn):
    """Combine two tensors legwise: sum of left_fn(a1,b1) (x) right_fn(a2,b2).

    This is the workhorse for bialgebra-style identities, e.g. computing
    the product of two coproducts componentwise.
    """
    out = Tensor()
    for (a1, a2), c1 in t1._terms.items():
        for (b1, b2), c2 in t2._terms.items():
            out = out + tensor_of(left_fn(a1, b1), right_fn(a2, b2)) * (c1 * c2)
    return out


class CollectionError(Exception):
    """An expansion failed to regroup into orbit sums with one uniform
    coefficient per orbit.  Signals an implementation bug, never expected."""


def collect(element, class_of, members_of):
    """Regroup an Element on orbit classes.

    class_of(key) names the orbit of a basis key; members_of(cls) lists the
    full orbit.  Every member of a touched orbit must carry the same
    coefficient, which becomes the coefficient of the class.
    """
    seen = {}
    for key, coeff in element._terms.items():
        seen.setdefault(class_of(key), {})[key] = coeff
    out = {}
    for cls, found in seen.items():
        members = list(members_of(cls))
        coeffs = {found.get(m, zero) for m in members}
        if len(found) != len(members) or len(coeffs) != 1:
            raise CollectionError(
                "orbit of %s carries non-uniform coefficients" % (cls,)
            )
        out[cls] = coeffs.pop()
    result = Element.__new__(Element)
    result._terms = out
    return result


def collect_tensor(tensor, class_of, members_of):
    """Pairwise version of collect for Tensor values."""
    seen = {}
    for (k1, k2), coeff in tensor._terms.items():
        cls = (class_of(k1), class_of(k2))
        seen.setdefault(cls, {})[(k1, k2)] = coeff
    out = {}
    for cls, found in seen.items():
        members = list(itertools.product(members_of(cls[0]), members_of(cls[1])))
        coeffs = {found.get(m, zero) for m in members}
        if len(found) != len(members) or len(coeffs) != 1:
            raise CollectionError(
                "orbit of %s (x) %s carries non-uniform coefficients" % cls
            )
        out[cls] = coeffs.pop()
    result = Tensor.__new__(Tensor)
    result._terms = out
    return result
