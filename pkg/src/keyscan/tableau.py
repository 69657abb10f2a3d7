"""Core data model: shapes, semistandard tableaux, skew tableaux, text I/O.

Conventions used throughout the package:

* A *shape* is a weakly decreasing tuple of positive column lengths.
  Shapes are notated by column lengths, not row lengths; use
  :func:`conjugate` to convert between the two conventions.
* Columns are tuples of entries, strictly increasing top to bottom.
* Rows weakly increase left to right.
* Every tableau carries an entry bound ``n``; all entries lie in ``1..n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations


class TableauError(ValueError):
    """Base class for all validation and parsing errors."""


class RaggedShape(TableauError):
    pass


class NonDecreasingColumn(TableauError):
    pass


class DecreasingRow(TableauError):
    pass


class EntryOutOfBound(TableauError):
    pass


class ShapeMismatch(TableauError):
    pass


class TableauSyntaxError(TableauError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}" + (f", column {column}" if column is not None else "") + f": {message}"
        super().__init__(message)


def is_shape(lengths) -> bool:
    """True iff ``lengths`` is a weakly decreasing sequence of positive integers."""
    lengths = tuple(lengths)
    return all(isinstance(x, int) and x >= 1 for x in lengths) and all(
        a >= b for a, b in zip(lengths, lengths[1:])
    )


def conjugate(lengths) -> tuple[int, ...]:
    """Conjugate partition: converts column lengths to row lengths and back."""
    lengths = tuple(lengths)
    if not lengths:
        return ()
    return tuple(sum(1 for x in lengths if x >= r) for r in range(1, max(lengths) + 1))


@dataclass(frozen=True)
class Tableau:
    """A semistandard Young tableau, stored column by column.

    ``columns[i][r]`` is the entry in column ``i`` (0-based), row ``r``
    (0-based from the top).  Construction validates semistandardness and
    raises a :class:`TableauError` subclass naming the first violation.
    """

    columns: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise EntryOutOfBound(f"entry bound must be >= 1, got {self.n}")
        lengths = tuple(len(c) for c in self.columns)
        if any(l == 0 for l in lengths) or any(a < b for a, b in zip(lengths, lengths[1:])):
            raise RaggedShape(f"column lengths {lengths} do not form a shape")
        for i, col in enumerate(self.columns):
            for r, e in enumerate(col):
                if not isinstance(e, int) or e < 1 or e > self.n:
                    raise EntryOutOfBound(
                        f"entry {e} at row {r + 1}, column {i + 1} outside 1..{self.n}"
                    )
                if r > 0 and col[r - 1] >= e:
                    raise NonDecreasingColumn(
                        f"column {i + 1} not strictly increasing at row {r + 1}"
                    )
                if i > 0 and r < len(self.columns[i - 1]) and self.columns[i - 1][r] > e:
                    raise DecreasingRow(
                        f"row {r + 1} decreases between columns {i} and {i + 1}"
                    )

    # -- basic structure -------------------------------------------------

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.columns)

    @property
    def k(self) -> int:
        return len(self.columns)

    @property
    def num_boxes(self) -> int:
        return sum(len(c) for c in self.columns)

    def rows(self) -> list[list[int]]:
        """The filling as top-left-justified rows."""
        height = len(self.columns[0]) if self.columns else 0
        return [
            [c[r] for c in self.columns if r < len(c)] for r in range(height)
        ]

    def bottom_entries(self) -> tuple[int, ...]:
        return tuple(c[-1] for c in self.columns)

    @classmethod
    def from_rows(cls, rows, n=None) -> "Tableau":
        """Build and validate a tableau from a top-left-justified grid of rows."""
        rows = [list(r) for r in rows]
        widths = [len(r) for r in rows]
        if any(w == 0 for w in widths) or any(a < b for a, b in zip(widths, widths[1:])):
            raise RaggedShape(f"row lengths {widths} are not top-left justified")
        if n is None:
            n = max((e for r in rows for e in r), default=1)
        ncols = widths[0] if widths else 0
        columns = tuple(
            tuple(rows[r][i] for r in range(len(rows)) if i < widths[r])
            for i in range(ncols)
        )
        return cls(columns, n)

    # -- derived quantities ----------------------------------------------

    def is_key(self) -> bool:
        """True iff each column's entry set is contained in the column to its left."""
        return all(
            set(self.columns[i]) <= set(self.columns[i - 1])
            for i in range(1, len(self.columns))
        )

    def weight(self) -> tuple[int, ...]:
        """Multiplicity vector: component ``i`` counts occurrences of entry ``i+1``."""
        w = [0] * self.n
        for col in self.columns:
            for e in col:
                w[e - 1] += 1
        return tuple(w)

    def complement(self) -> "Tableau":
        """Replace each entry ``e`` by ``n+1-e`` and re-sort each column.

        An involution when defined, but the result is not semistandard for
        every input (the row condition can fail across columns of unequal
        length); in that case a :class:`DecreasingRow` error is raised.
        """
        cols = tuple(
            tuple(sorted(self.n + 1 - e for e in col)) for col in self.columns
        )
        return Tableau(cols, self.n)

    def restrict(self, start: int) -> "Tableau":
        """The tableau formed by columns ``start.. `` (0-based start)."""
        return Tableau(self.columns[start:], self.n)

    def __str__(self):
        return format_tableau(self)


def entrywise_leq(a: Tableau, b: Tableau) -> bool:
    """True iff every entry of ``a`` is <= the corresponding entry of ``b``."""
    if a.shape != b.shape:
        raise ShapeMismatch(f"shapes {a.shape} and {b.shape} differ")
    return all(
        x <= y for ca, cb in zip(a.columns, b.columns) for x, y in zip(ca, cb)
    )


# -- text format ----------------------------------------------------------
#
# One row per line, entries separated by single spaces, rows top-left
# justified.  An optional first line "n=<bound>" fixes the entry bound;
# otherwise the maximum entry present is used.  A blank line terminates.


def parse_tableau(text: str) -> Tableau:
    lines = text.splitlines()
    n = None
    rows = []
    lineno = 0
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            if rows or n is not None:
                break
            continue
        if stripped.startswith("n=") and not rows:
            try:
                n = int(stripped[2:])
            except ValueError:
                raise TableauSyntaxError(f"bad entry bound {stripped!r}", lineno)
            if n < 1:
                raise TableauSyntaxError("entry bound must be positive", lineno)
            continue
        row = []
        for colno, tok in enumerate(stripped.split(), start=1):
            try:
                e = int(tok)
            except ValueError:
                raise TableauSyntaxError(f"not an integer: {tok!r}", lineno, colno)
            if e < 1:
                raise TableauSyntaxError("entries must be positive", lineno, colno)
            row.append(e)
        rows.append(row)
    if not rows:
        if n is None:
            raise TableauSyntaxError("empty input", lineno or 1)
        return Tableau((), n)
    return Tableau.from_rows(rows, n)


def format_tableau(t: Tableau, header: bool = True) -> str:
    lines = []
    if header:
        lines.append(f"n={t.n}")
    lines.extend(" ".join(str(e) for e in row) for row in t.rows())
    return "\n".join(lines) + "\n"


# -- enumeration -----------------------------------------------------------


def _columns_of_length(length: int, n: int, lower) -> list[tuple[int, ...]]:
    """Strictly increasing columns of the given length with entries <= n,
    bounded below entrywise by ``lower`` (row-weak condition with the column
    to the left).  Returned in lexicographic order."""
    out = []
    col = [0] * length

    def rec(r, lo):
        lo = max(lo, lower[r] if r < len(lower) else 1)
        for e in range(lo, n - (length - 1 - r) + 1):
            col[r] = e
            if r + 1 == length:
                out.append(tuple(col))
            else:
                rec(r + 1, e + 1)

    if length <= n:
        rec(0, 1)
    return out


def enumerate_tableaux(shape, n: int):
    """Yield every semistandard tableau of ``shape`` with entries <= ``n``.

    Order is lexicographic by column reading word (each column read top to
    bottom, columns left to right), which keeps golden files stable.
    """
    shape = tuple(shape)
    if shape and not is_shape(shape):
        raise RaggedShape(f"{shape} is not a shape")
    if not shape:
        yield Tableau((), n)
        return
    if shape[0] > n:
        return
    k = len(shape)
    acc = []

    def rec(i, prev):
        if i == k:
            yield Tableau(tuple(acc), n)
            return
        for col in _columns_of_length(shape[i], n, prev):
            acc.append(col)
            yield from rec(i + 1, col)
            acc.pop()

    yield from rec(0, ())


def count_tableaux(shape, n: int) -> int:
    """Number of semistandard tableaux of ``shape`` with entries <= ``n``.

    Independent column-by-column dynamic program over all strictly
    increasing columns; used as a counting oracle for the enumerator.
    """
    shape = tuple(shape)
    if not shape:
        return 1
    if shape[0] > n:
        return 0
    dp = {col: 1 for col in combinations(range(1, n + 1), shape[0])}
    for length in shape[1:]:
        nxt = {}
        for col in combinations(range(1, n + 1), length):
            total = 0
            for prev, ways in dp.items():
                if all(prev[r] <= col[r] for r in range(length)):
                    total += ways
            if total:
                nxt[col] = total
        dp = nxt
    return sum(dp.values())


# -- skew tableaux ---------------------------------------------------------


@dataclass(frozen=True)
class SkewTableau:
    """A filling of a skew diagram, stored as (offset, entries) per column.

    Column ``i`` occupies rows ``offset .. offset+len(entries)-1``.  After
    length swaps the column lengths need not be weakly decreasing; validity
    is adjacency-level only: strict down each column, weak along every pair
    of horizontally adjacent boxes.
    """

    columns: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        for i, (off, col) in enumerate(self.columns):
            if off < 0:
                raise RaggedShape(f"negative offset in column {i + 1}")
            for r, e in enumerate(col):
                if not isinstance(e, int) or e < 1:
                    raise EntryOutOfBound(f"bad entry {e} in column {i + 1}")
                if r > 0 and col[r - 1] >= e:
                    raise NonDecreasingColumn(
                        f"column {i + 1} not strictly increasing"
                    )
        for i in range(1, len(self.columns)):
            lo, lcol = self.columns[i - 1]
            ro, rcol = self.columns[i]
            top = max(lo, ro)
            bot = min(lo + len(lcol), ro + len(rcol))
            for r in range(top, bot):
                if lcol[r - lo] > rcol[r - ro]:
                    raise DecreasingRow(
                        f"row {r + 1} decreases between columns {i} and {i + 1}"
                    )

    @classmethod
    def from_tableau(cls, t: Tableau) -> "SkewTableau":
        return cls(tuple((0, col) for col in t.columns))

    def lengths(self) -> tuple[int, ...]:
        return tuple(len(col) for _, col in self.columns)

    def offsets(self) -> tuple[int, ...]:
        return tuple(off for off, _ in self.columns)

    @property
    def num_boxes(self) -> int:
        return sum(len(col) for _, col in self.columns)

    def cell(self, c: int, r: int):
        """Entry at column ``c``, absolute row ``r`` (both 0-based), or None."""
        if not 0 <= c < len(self.columns):
            return None
        off, col = self.columns[c]
        if off <= r < off + len(col):
            return col[r - off]
        return None

    def cells(self) -> dict[tuple[int, int], int]:
        """All filled cells as a ``{(column, row): entry}`` dict."""
        out = {}
        for c, (off, col) in enumerate(self.columns):
            for r, e in enumerate(col):
                out[(c, off + r)] = e
        return out

    def is_straight(self) -> bool:
        lens = [len(col) for _, col in self.columns if col]
        return (
            all(off == 0 for off, col in self.columns if col)
            and all(a >= b for a, b in zip(lens, lens[1:]))
            and all(col for _, col in self.columns)
        )

    def to_tableau(self, n=None) -> Tableau:
        if not self.is_straight():
            raise RaggedShape("skew tableau is not of straight shape")
        cols = tuple(col for _, col in self.columns if col)
        if n is None:
            n = max((e for col in cols for e in col), default=1)
        return Tableau(cols, n)
