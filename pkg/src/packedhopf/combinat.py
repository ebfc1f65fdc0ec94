"""Packed words, set compositions, set partitions and multidegrees.

These are the index sets underneath everything else: packed words index
WQSym, set compositions and partitions index the half-symmetric algebras,
and multidegrees encode diagram columns.  Words and sets are 1-based
throughout.  All values are immutable and hashable.
"""

import itertools
from collections import Counter
from functools import lru_cache
from math import comb


def _word_str(letters):
    if not letters:
        return "e"
    if all(a <= 9 for a in letters):
        return "".join(str(a) for a in letters)
    return ",".join(str(a) for a in letters)


def _word_parse(text):
    text = text.strip()
    if text in ("", "e"):
        return ()
    if "," in text:
        return tuple(int(part) for part in text.split(","))
    return tuple(int(ch) for ch in text)


def _set_str(elements):
    return "{" + " ".join(str(x) for x in sorted(elements)) + "}"


def _set_parse(text):
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError("expected a set like {1 3 4}, got %r" % text)
    body = text[1:-1].strip()
    if not body:
        return frozenset()
    return frozenset(int(part) for part in body.split())


def _split_top_level(body, sep=","):
    """Split on sep at brace/bracket/paren depth zero."""
    parts, depth, current = [], 0, []
    for ch in body:
        if ch in "{[(":
            depth += 1
        elif ch in "}])":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


class PackedWord:
    """Word over [1, k] in which every letter 1..k occurs at least once."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        letters = tuple(int(a) for a in letters)
        if letters:
            support = set(letters)
            if min(support) < 1 or support != set(range(1, max(support) + 1)):
                raise ValueError("word %r is not packed" % (letters,))
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("PackedWord is immutable")

    def __len__(self):
        return len(self.letters)

    def max(self):
        """Largest letter, 0 for the empty word."""
        return max(self.letters, default=0)

    def __eq__(self, other):
        return isinstance(other, PackedWord) and self.letters == other.letters

    def __hash__(self):
        return hash(("PackedWord", self.letters))

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __str__(self):
        return _word_str(self.letters)

    def __repr__(self):
        return "PackedWord(%r)" % (str(self),)

    @classmethod
    def parse(cls, text):
        return cls(_word_parse(text))


class SetComposition:
    """Ordered sequence of disjoint nonempty blocks partitioning [1, n]."""

    __slots__ = ("parts", "n")

    def __init__(self, parts=()):
        parts = tuple(frozenset(int(x) for x in p) for p in parts)
        total = 0
        union = set()
        for i, part in enumerate(parts):
            if not part:
                raise ValueError("part %d is empty" % (i + 1))
            total += len(part)
            union |= part
        if len(union) != total or (union and union != set(range(1, total + 1))):
            raise ValueError("parts do not partition [1, n]: %r" % (parts,))
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", total)

    def __setattr__(self, name, value):
        raise AttributeError("SetComposition is immutable")

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, SetComposition) and self.parts == other.parts

    def __hash__(self):
        return hash(("SetComposition", self.parts))

    def sort_key(self):
        return (self.n, len(self.parts), tuple(tuple(sorted(p)) for p in self.parts))

    def __str__(self):
        return "[" + ",".join(_set_str(p) for p in self.parts) + "]"

    def __repr__(self):
        return "SetComposition.parse(%r)" % (str(self),)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError("expected a set composition like [{1 3},{2}], got %r" % text)
        body = text[1:-1].strip()
        if not body:
            return cls()
        return cls(_set_parse(p) for p in _split_top_level(body))


class SetPartition:
    """Unordered partition of [1, n]; blocks stored sorted by minimum element."""

    __slots__ = ("blocks", "n")

    def __init__(self, blocks=()):
        blocks = tuple(
            sorted((frozenset(int(x) for x in b) for b in blocks), key=min)
        ) if blocks else ()
        total = 0
        union = set()
        for block in blocks:
            if not block:
                raise ValueError("empty block in set partition")
            total += len(block)
            union |= block
        if len(union) != total or (union and union != set(range(1, total + 1))):
            raise ValueError("blocks do not partition [1, n]: %r" % (blocks,))
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "n", total)

    def __setattr__(self, name, value):
        raise AttributeError("SetPartition is immutable")

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(("SetPartition", self.blocks))

    def sort_key(self):
        return (self.n, len(self.blocks), tuple(tuple(sorted(b)) for b in self.blocks))

    def __str__(self):
        return "{" + ",".join(_set_str(b) for b in self.blocks) + "}"

    def __repr__(self):
        return "SetPartition.parse(%r)" % (str(self),)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise ValueError("expected a set partition like {{1 3},{2}}, got %r" % text)
        body = text[1:-1].strip()
        if not body:
            return cls()
        return cls(_set_parse(p) for p in _split_top_level(body))


class Multidegree:
    """Finite sequence of nonnegative coordinates with trailing zeros trimmed.

    The weight is the coordinate sum; nonzero multidegrees form the
    semigroup of letters used by diagram codings.
    """

    __slots__ = ("coords",)

    def __init__(self, coords=()):
        coords = tuple(int(x) for x in coords)
        if any(x < 0 for x in coords):
            raise ValueError("negative coordinate in multidegree")
        while coords and coords[-1] == 0:
            coords = coords[:-1]
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("Multidegree is immutable")

    def weight(self):
        return sum(self.coords)

    def is_zero(self):
        return not self.coords

    def __len__(self):
        return len(self.coords)

    def __add__(self, other):
        n = max(len(self.coords), len(other.coords))
        a = self.coords + (0,) * (n - len(self.coords))
        b = other.coords + (0,) * (n - len(other.coords))
        return Multidegree(x + y for x, y in zip(a, b))

    def shifted(self, k):
        """Insert k zeros on the left."""
        if not self.coords:
            return self
        return Multidegree((0,) * k + self.coords)

    def __eq__(self, other):
        return isinstance(other, Multidegree) and self.coords == other.coords

    def __hash__(self):
        return hash(("Multidegree", self.coords))

    def sort_key(self):
        return (len(self.coords), self.coords)

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.coords) + ")"

    def __repr__(self):
        return "Multidegree(%r)" % (self.coords,)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError("expected a multidegree like (1,3,1), got %r" % text)
        body = text[1:-1].strip()
        if not body:
            return cls()
        return cls(int(part) for part in body.split(","))


def pack(word):
    """Order-preserving relabeling of a word's letters onto 1..k.

    The output keeps the length and every pairwise <, =, > relation of the
    input, and is packed.
    """
    letters = tuple(int(a) for a in word)
    ranks = {a: i for i, a in enumerate(sorted(set(letters)), start=1)}
    return PackedWord(ranks[a] for a in letters)


def word_to_setcomp(word):
    """The set composition whose j-th part holds the positions of letter j."""
    parts = [set() for _ in range(word.max())]
    for position, letter in enumerate(word.letters, start=1):
        parts[letter - 1].add(position)
    return SetComposition(parts)


def setcomp_to_word(composition):
    """Inverse of word_to_setcomp."""
    letters = [0] * composition.n
    for j, part in enumerate(composition.parts, start=1):
        for position in part:
            letters[position - 1] = j
    return PackedWord(letters)


def sp(composition):
    """Forget the order of the parts of a set composition."""
    return SetPartition(composition.parts)


def convolution(u, v):
    """Multiset of packed words w = w1.w2 with pack(w1) = u and pack(w2) = v.

    Enumerated by choosing the value sets of both halves: a pair of
    strictly increasing embeddings of [1, max u] and [1, max v] into a
    common [1, k] covering it.
    """
    out = Counter()
    ku, kv = u.max(), v.max()
    full = None
    for k in range(max(ku, kv), ku + kv + 1):
        full = frozenset(range(1, k + 1))
        for iu in itertools.combinations(range(1, k + 1), ku):
            for iv in itertools.combinations(range(1, k + 1), kv):
                if frozenset(iu) | frozenset(iv) != full:
                    continue
                letters = tuple(iu[a - 1] for a in u.letters)
                letters += tuple(iv[a - 1] for a in v.letters)
                out[PackedWord(letters)] += 1
    return out


def shuffles(s, t):
    """All interleavings of two sequences, preserving internal order."""
    if not s:
        yield tuple(t)
        return
    if not t:
        yield tuple(s)
        return
    for rest in shuffles(s[1:], t):
        yield (s[0],) + rest
    for rest in shuffles(s, t[1:]):
        yield (t[0],) + rest


def shifted_shuffle(u, v):
    """Multiset shuffle of u with v shifted up by max(u)."""
    out = Counter()
    shift = u.max()
    shifted = tuple(a + shift for a in v.letters)
    for letters in shuffles(u.letters, shifted):
        out[PackedWord(letters)] += 1
    return out


@lru_cache(maxsize=None)
def ordered_bell(n):
    """Number of set compositions of [1, n]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return sum(comb(n, k) * ordered_bell(n - k) for k in range(1, n + 1))


@lru_cache(maxsize=None)
def bell(n):
    """Number of set partitions of [1, n]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return sum(comb(n - 1, k - 1) * bell(n - k) for k in range(1, n + 1))


def packed_words(n):
    """All packed words of length n: surjections onto [1, k] for some k."""
    def fill(prefix, unused, remaining, k):
        if remaining == 0:
            if not unused:
                yield PackedWord(prefix)
            return
        if len(unused) > remaining:
            return
        for letter in range(1, k + 1):
            yield from fill(prefix + (letter,), unused - {letter}, remaining - 1, k)

    if n == 0:
        yield PackedWord()
        return
    for k in range(1, n + 1):
        yield from fill((), frozenset(range(1, k + 1)), n, k)


def set_compositions(n):
    """All set compositions of [1, n], first part chosen then recursing."""
    def split(remaining):
        if not remaining:
            yield ()
            return
        items = sorted(remaining)
        for size in range(1, len(items) + 1):
            for chosen in itertools.combinations(items, size):
                first = frozenset(chosen)
                for rest in split(remaining - first):
                    yield (first,) + rest

    for parts in split(frozenset(range(1, n + 1))):
        yield SetComposition(parts)


def set_partitions(n):
    """All set partitions of [1, n], inserting each element in turn."""
    def insert(k):
        if k == 0:
            yield ()
            return
        for smaller in insert(k - 1):
            for i, block in enumerate(smaller):
                yield smaller[:i] + (block | {k},) + smaller[i + 1 :]
            yield smaller + (frozenset({k}),)

    for blocks in insert(n):
        yield SetPartition(blocks)
