"""Packed matrices (set and integer entries), bi-words, and their bijections.

A set packed matrix holds disjoint subsets of [1, n] filling [1, n], with
no all-empty row or column; it is equivalent to a pair of set compositions
(row unions, column unions) and to a bi-packed bi-word (the i-th bi-letter
is the (row, column) coordinate of the label i).  Forgetting labels, i.e.
replacing each set by its cardinality, gives an integer packed matrix --
the edge-multiplicity matrix of a bipartite multigraph.
"""

import itertools

from .combinat import (
    Multidegree,
    SetComposition,
    _set_parse,
    _set_str,
    _split_top_level,
    _word_parse,
    _word_str,
    pack,
    set_compositions,
)


class SetPackedMatrix:
    """Rectangular array of disjoint subsets of [1, n] whose union is [1, n],
    with no all-empty row or column.  The 0x0 matrix (n = 0) is the unit
    basis element of every algebra built on these."""

    __slots__ = ("rows", "n")

    def __init__(self, rows=()):
        rows = tuple(tuple(frozenset(int(x) for x in cell) for cell in row) for row in rows)
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise ValueError("ragged rows")
            if width == 0:
                raise ValueError("row 1 is all empty")
        else:
            width = 0
        total = 0
        union = set()
        for i, row in enumerate(rows):
            if not any(row):
                raise ValueError("row %d is all empty" % (i + 1))
            for cell in row:
                total += len(cell)
                union |= cell
        for j in range(width):
            if not any(rows[i][j] for i in range(len(rows))):
                raise ValueError("column %d is all empty" % (j + 1))
        if len(union) != total:
            raise ValueError("entries are not disjoint")
        if union and union != set(range(1, total + 1)):
            raise ValueError("entries do not fill [1, %d]" % total)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", total)

    def __setattr__(self, name, value):
        raise AttributeError("SetPackedMatrix is immutable")

    @classmethod
    def unit(cls):
        return cls()

    @property
    def height(self):
        return len(self.rows)

    @property
    def width(self):
        return len(self.rows[0]) if self.rows else 0

    def is_unit(self):
        return not self.rows

    def row_sets(self):
        """Union of each row's cells."""
        return tuple(frozenset().union(*row) for row in self.rows)

    def col_sets(self):
        return tuple(
            frozenset().union(*(row[j] for row in self.rows))
            for j in range(self.width)
        )

    def cells(self):
        return self.rows

    def __eq__(self, other):
        return isinstance(other, SetPackedMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(("SetPackedMatrix", self.rows))

    def sort_key(self):
        return (
            self.n,
            self.height,
            self.width,
            tuple(tuple(tuple(sorted(cell)) for cell in row) for row in self.rows),
        )

    def __str__(self):
        return (
            "["
            + ";".join(",".join(_set_str(cell) for cell in row) for row in self.rows)
            + "]"
        )

    def __repr__(self):
        return "SetPackedMatrix.parse(%r)" % (str(self),)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError("expected a set matrix like [{1},{2 3};{4},{}], got %r" % text)
        body = text[1:-1].strip()
        if not body:
            return cls()
        rows = []
        for row_text in _split_top_level(body, ";"):
            rows.append([_set_parse(c) for c in _split_top_level(row_text)])
        return cls(rows)


class IntPackedMatrix:
    """Nonnegative integer matrix with no zero row or column; the degree is
    the sum of all entries.  The 0x0 matrix is the unit."""

    __slots__ = ("rows", "degree")

    def __init__(self, rows=()):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise ValueError("ragged rows")
            if width == 0:
                raise ValueError("row 1 is all zero")
        else:
            width = 0
        for i, row in enumerate(rows):
            if any(x < 0 for x in row):
                raise ValueError("negative entry in row %d" % (i + 1))
            if not any(row):
                raise ValueError("row %d is all zero" % (i + 1))
        for j in range(width):
            if not any(row[j] for row in rows):
                raise ValueError("column %d is all zero" % (j + 1))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "degree", sum(sum(row) for row in rows))

    def __setattr__(self, name, value):
        raise AttributeError("IntPackedMatrix is immutable")

    @classmethod
    def unit(cls):
        return cls()

    @property
    def height(self):
        return len(self.rows)

    @property
    def width(self):
        return len(self.rows[0]) if self.rows else 0

    def is_unit(self):
        return not self.rows

    def __eq__(self, other):
        return isinstance(other, IntPackedMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(("IntPackedMatrix", self.rows))

    def sort_key(self):
        return (self.degree, self.height, self.width, self.rows)

    def __str__(self):
        return "[" + ";".join(",".join(str(x) for x in row) for row in self.rows) + "]"

    def __repr__(self):
        return "IntPackedMatrix.parse(%r)" % (str(self),)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError("expected an integer matrix like [2,0,1;0,3,4], got %r" % text)
        body = text[1:-1].strip()
        if not body:
            return cls()
        return cls(
            [int(x) for x in row_text.split(",")] for row_text in body.split(";")
        )


class BiWord:
    """Pair of equal-length words over the positive integers."""

    __slots__ = ("top", "bottom")

    def __init__(self, top=(), bottom=()):
        top = tuple(int(a) for a in top)
        bottom = tuple(int(a) for a in bottom)
        if len(top) != len(bottom):
            raise ValueError("top and bottom words have different lengths")
        if any(a < 1 for a in top) or any(a < 1 for a in bottom):
            raise ValueError("bi-word letters must be positive")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    def __setattr__(self, name, value):
        raise AttributeError("BiWord is immutable")

    def __len__(self):
        return len(self.top)

    def is_bipacked(self):
        return (
            pack(self.top).letters == self.top
            and pack(self.bottom).letters == self.bottom
        )

    def __eq__(self, other):
        return (
            isinstance(other, BiWord)
            and self.top == other.top
            and self.bottom == other.bottom
        )

    def __hash__(self):
        return hash(("BiWord", self.top, self.bottom))

    def sort_key(self):
        return (len(self.top), self.top, self.bottom)

    def __str__(self):
        return "(%s|%s)" % (
            _word_str(self.top) if self.top else "",
            _word_str(self.bottom) if self.bottom else "",
        )

    def __repr__(self):
        return "BiWord.parse(%r)" % (str(self),)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")) or "|" not in text:
            raise ValueError("expected a bi-word like (312|211), got %r" % text)
        top_text, bottom_text = text[1:-1].split("|", 1)
        return cls(_word_parse(top_text), _word_parse(bottom_text))


def bipack(biword):
    """Pack both rows of a bi-word independently."""
    return BiWord(pack(biword.top).letters, pack(biword.bottom).letters)


def star(b1, b2):
    """Concatenate bi-words, shifting the second bottom word by max(bottom1).

    This is the associative product carried by the bi-word realization.
    """
    shift = max(b1.bottom, default=0)
    return BiWord(
        b1.top + b2.top,
        b1.bottom + tuple(a + shift for a in b2.bottom),
    )


def setcomp_pair(matrix):
    """Row and column set compositions of a set packed matrix."""
    return (
        SetComposition(matrix.row_sets()),
        SetComposition(matrix.col_sets()),
    )


def from_setcomp_pair(row_comp, col_comp):
    """Rebuild the matrix with cells row_i & col_j; inverse of setcomp_pair."""
    if row_comp.n != col_comp.n:
        raise ValueError(
            "compositions cover different ground sets (%d vs %d)"
            % (row_comp.n, col_comp.n)
        )
    return SetPackedMatrix(
        tuple(tuple(r & c for c in col_comp.parts) for r in row_comp.parts)
    )


def to_biword(matrix):
    """Bi-word whose i-th bi-letter is the (row, column) holding the label i."""
    top = [0] * matrix.n
    bottom = [0] * matrix.n
    for i, row in enumerate(matrix.rows, start=1):
        for j, cell in enumerate(row, start=1):
            for label in cell:
                top[label - 1] = i
                bottom[label - 1] = j
    return BiWord(top, bottom)


def from_biword(biword):
    """Set packed matrix of a bi-packed bi-word; inverse of to_biword."""
    if pack(biword.top).letters != biword.top:
        raise ValueError("top word is not packed")
    if pack(biword.bottom).letters != biword.bottom:
        raise ValueError("bottom word is not packed")
    height = max(biword.top, default=0)
    width = max(biword.bottom, default=0)
    grid = [[set() for _ in range(width)] for _ in range(height)]
    for label, (i, j) in enumerate(zip(biword.top, biword.bottom), start=1):
        grid[i - 1][j - 1].add(label)
    return SetPackedMatrix(grid)


def is_column_standard(matrix):
    """True iff reading the cells by columns, top to bottom then left to
    right, each cell in increasing order, yields 1, 2, ..., n."""
    expected = 1
    for j in range(matrix.width):
        for i in range(matrix.height):
            for label in sorted(matrix.rows[i][j]):
                if label != expected:
                    return False
                expected += 1
    return True


def to_int_matrix(matrix):
    """Replace each set by its cardinality (requires column-standard input)."""
    if not is_column_standard(matrix):
        raise ValueError("matrix is not column-standard: %s" % matrix)
    return IntPackedMatrix(tuple(tuple(len(cell) for cell in row) for row in matrix.rows))


def from_int_matrix(int_matrix):
    """Fill cells with consecutive labels in column-reading order; the
    unique column-standard set matrix with the given cardinalities."""
    grid = [[None] * int_matrix.width for _ in range(int_matrix.height)]
    label = 1
    for j in range(int_matrix.width):
        for i in range(int_matrix.height):
            size = int_matrix.rows[i][j]
            grid[i][j] = frozenset(range(label, label + size))
            label += size
    return SetPackedMatrix(grid)


def shift_entries(matrix, k):
    """Translate every entry by k; returns a raw cell grid (the result
    partitions [k+1, k+n], so it is not a SetPackedMatrix)."""
    cells = matrix.rows if isinstance(matrix, SetPackedMatrix) else matrix
    return tuple(
        tuple(frozenset(x + k for x in cell) for cell in row) for row in cells
    )


def std(matrix):
    """Order-preserving relabeling of the entries onto 1..n.

    Accepts a SetPackedMatrix or a raw cell grid with pairwise disjoint
    entries; never erases rows or columns, so the grid shape must already
    be free of empty rows and columns.
    """
    cells = matrix.rows if isinstance(matrix, SetPackedMatrix) else tuple(matrix)
    values = sorted(x for row in cells for cell in row for x in cell)
    rank = {x: i for i, x in enumerate(values, start=1)}
    return SetPackedMatrix(
        tuple(tuple(frozenset(rank[x] for x in cell) for cell in row) for row in cells)
    )


def erase_empty_columns(cells):
    if not cells:
        return ()
    keep = [j for j in range(len(cells[0])) if any(row[j] for row in cells)]
    return tuple(tuple(row[j] for j in keep) for row in cells)


def erase_empty_rows(cells):
    return tuple(row for row in cells if any(row))


def _set_row_key(row):
    return min(frozenset().union(*row))


def _int_sort_rows(rows):
    # largest-first lexicographic order on row vectors
    return tuple(sorted(rows, reverse=True))


def _transpose(rows):
    return tuple(zip(*rows)) if rows else ()


def canonical_row_class(matrix):
    """Canonical representative of the matrix up to row permutations."""
    if isinstance(matrix, SetPackedMatrix):
        return SetPackedMatrix(sorted(matrix.rows, key=_set_row_key))
    return IntPackedMatrix(_int_sort_rows(matrix.rows))


def canonical_col_class(matrix):
    """Canonical representative up to column permutations."""
    if isinstance(matrix, SetPackedMatrix):
        cols = sorted(_transpose(matrix.rows), key=_set_row_key)
        return SetPackedMatrix(_transpose(cols))
    cols = _int_sort_rows(_transpose(matrix.rows))
    return IntPackedMatrix(_transpose(cols))


def canonical_rowcol_class(matrix):
    """Canonical representative up to independent row and column
    permutations: the sort_key-smallest column-canonical form over all row
    arrangements.  Brute force over row permutations keeps the choice
    orbit-constant, which sorting heuristics alone do not guarantee."""
    best = None
    for rows in itertools.permutations(matrix.rows):
        if isinstance(matrix, SetPackedMatrix):
            candidate = canonical_col_class(SetPackedMatrix(rows))
        else:
            candidate = canonical_col_class(IntPackedMatrix(rows))
        if best is None or candidate.sort_key() < best.sort_key():
            best = candidate
    return matrix if best is None else best


def row_orbit(matrix):
    """Distinct matrices obtained by permuting rows, in canonical order."""
    kind = type(matrix)
    seen = {kind(rows) for rows in itertools.permutations(matrix.rows)}
    return sorted(seen, key=lambda m: m.sort_key())


def col_orbit(matrix):
    kind = type(matrix)
    seen = {
        kind(_transpose(cols))
        for cols in itertools.permutations(_transpose(matrix.rows))
    }
    if not matrix.rows:
        seen = {matrix}
    return sorted(seen, key=lambda m: m.sort_key())


def rowcol_orbit(matrix):
    seen = set()
    for m in row_orbit(matrix):
        seen.update(col_orbit(m))
    return sorted(seen, key=lambda m: m.sort_key())


class LabelledDiagram:
    """Bipartite multigraph with p white and q black spots, every spot of
    degree at least one; stored as the p x q edge-multiplicity grid.

    Identical data to an integer packed matrix: entry (i, j) counts the
    edges joining white spot i to black spot j.
    """

    __slots__ = ("weights",)

    def __init__(self, weights=()):
        matrix = IntPackedMatrix(weights)  # reuse packedness validation
        object.__setattr__(self, "weights", matrix.rows)

    def __setattr__(self, name, value):
        raise AttributeError("LabelledDiagram is immutable")

    @classmethod
    def unit(cls):
        return cls()

    @classmethod
    def from_matrix(cls, int_matrix):
        return cls(int_matrix.rows)

    @property
    def white_count(self):
        return len(self.weights)

    @property
    def black_count(self):
        return len(self.weights[0]) if self.weights else 0

    def degree(self):
        return sum(sum(row) for row in self.weights)

    def to_matrix(self):
        return IntPackedMatrix(self.weights)

    def multiplier(self):
        """Degree-multiplicity exponents (alpha, beta): alpha_i counts the
        white spots of degree i, beta_i the black spots of degree i."""
        row_degrees = [sum(row) for row in self.weights]
        col_degrees = [
            sum(row[j] for row in self.weights) for j in range(self.black_count)
        ]

        def exponents(degrees):
            top = max(degrees, default=0)
            return Multidegree(degrees.count(d) for d in range(1, top + 1))

        return exponents(row_degrees), exponents(col_degrees)

    def code_word(self):
        """Column vectors of the weight grid, as a tuple of multidegrees."""
        return tuple(
            Multidegree(row[j] for row in self.weights)
            for j in range(self.black_count)
        )

    def __eq__(self, other):
        return isinstance(other, LabelledDiagram) and self.weights == other.weights

    def __hash__(self):
        return hash(("LabelledDiagram", self.weights))

    def __str__(self):
        return str(self.to_matrix())

    def __repr__(self):
        return "LabelledDiagram.from_matrix(%r)" % (self.to_matrix(),)


def row_interleavings(p, q):
    """Ways to spread p ordered top rows and q ordered bottom rows over r
    result rows, max(p, q) <= r <= p + q, every result row used.

    Yields (rows_taking_a_top_row, rows_taking_a_bottom_row, r) with the
    index sets sorted; a row in both sets receives one row of each operand
    side by side.
    """
    for r in range(max(p, q), p + q + 1):
        for top_rows in itertools.combinations(range(r), p):
            forced = [i for i in range(r) if i not in top_rows]
            for extra in itertools.combinations(top_rows, q - len(forced)):
                yield top_rows, tuple(sorted(forced + list(extra))), r


def set_packed_matrices(n):
    """All set packed matrices with ground set [1, n], via the bijection
    with pairs of set compositions."""
    if n == 0:
        yield SetPackedMatrix.unit()
        return
    comps = list(set_compositions(n))
    for row_comp in comps:
        for col_comp in comps:
            yield from_setcomp_pair(row_comp, col_comp)


def int_packed_matrices(n):
    """All integer packed matrices of degree n."""
    if n == 0:
        yield IntPackedMatrix.unit()
        return

    def rows_of(p, q, total):
        # p rows of width q, each with positive sum, sums adding to total
        if p == 0:
            if total == 0:
                yield ()
            return
        for head_sum in range(1, total - (p - 1) + 1):
            for head in _compositions(head_sum, q):
                for rest in rows_of(p - 1, q, total - head_sum):
                    yield (head,) + rest

    for p in range(1, n + 1):
        for q in range(1, n + 1):
            for rows in rows_of(p, q, n):
                if all(any(row[j] for row in rows) for j in range(q)):
                    yield IntPackedMatrix(rows)


def _compositions(total, parts):
    """Weak compositions of total into the given number of parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest
