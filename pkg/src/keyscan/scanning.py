"""The direct scanning method for right and left keys.

The right key is obtained by iterated earliest-weakly-increasing-
subsequence (EWIS) passes over the bottom entries of the columns; the
left key by a right-to-left walk picking, in each column, the largest
entry not exceeding the previous pick.

Two interchangeable kernels compute the scanning tableau: a compiled
extension (``keyscan._scankernel``) and a pure-Python fallback
(``keyscan._scan_py``).  The compiled one is used when importable unless
the ``KEYSCAN_PURE`` environment variable is set.
"""

from __future__ import annotations

import os
from bisect import bisect_right
from dataclasses import dataclass

from . import _scan_py
from .tableau import Tableau

try:
    from . import _scankernel
except ImportError:  # pragma: no cover - depends on build environment
    _scankernel = None

HAVE_EXTENSION = _scankernel is not None
_kernel = _scan_py if (_scankernel is None or os.environ.get("KEYSCAN_PURE")) else _scankernel


def kernel_name() -> str:
    """Which scanning kernel is active: 'compiled' or 'pure'."""
    return "compiled" if _kernel is not None and _kernel is _scankernel else "pure"


class EmptySequence(ValueError):
    pass


class InternalInvariantError(AssertionError):
    """Raised when a structural guarantee of the algorithms fails.

    Indicates a bug (or an invalid tableau smuggled past validation),
    never a user error.
    """


@dataclass(frozen=True)
class EwisResult:
    """Earliest weakly increasing subsequence of a sequence.

    ``indices`` are 1-based positions into the scanned sequence; the first
    element always starts the subsequence, and each later index is the
    smallest one whose value is >= the previous member.
    """

    indices: tuple[int, ...]
    values: tuple[int, ...]

    @property
    def last(self) -> int:
        return self.values[-1]


def ewis(seq) -> EwisResult:
    seq = tuple(seq)
    if not seq:
        raise EmptySequence("EWIS of an empty sequence")
    indices = [1]
    values = [seq[0]]
    for i in range(1, len(seq)):
        if seq[i] >= values[-1]:
            indices.append(i + 1)
            values.append(seq[i])
    return EwisResult(tuple(indices), tuple(values))


def scan_column(t: Tableau, start: int, trace: list | None = None) -> tuple[int, ...]:
    """Column ``start`` (1-based) of the scanning tableau of ``t``.

    With ``trace`` a list, appends the values of each EWIS pass in
    discovery order, so the whole computation can be replayed
    pass by pass.
    """
    if not 1 <= start <= t.k:
        raise IndexError(f"start column {start} outside 1..{t.k}")
    if trace is None:
        return tuple(_kernel.scan_columns(list(t.columns[start - 1:]))[0])
    cols = t.columns
    alive = [len(c) for c in cols[start - 1:]]
    out = []
    while alive[0] > 0:
        bottoms = []
        positions = []
        for idx, a in enumerate(alive):
            if a:
                bottoms.append(cols[start - 1 + idx][a - 1])
                positions.append(idx)
        e = ewis(bottoms)
        for i in e.indices:
            alive[positions[i - 1]] -= 1
        trace.append(e.values)
        out.append(e.last)
    if any(alive):
        raise InternalInvariantError("scanning left unmarked boxes")
    return tuple(reversed(out))


def scanning_tableau(t: Tableau, skip_duplicate_lengths: bool = False) -> Tableau:
    """The scanning tableau of ``t``: same shape, and equal to its right key.

    ``skip_duplicate_lengths`` computes one column per distinct column
    length and copies it to the others (columns of equal length are
    identical); off by default.
    """
    if t.k == 0:
        return t
    cols = list(t.columns)
    if not skip_duplicate_lengths:
        return Tableau(tuple(_kernel.scan_columns(cols)), t.n)
    shape = t.shape
    out: list = [None] * t.k
    for s in range(t.k - 1, -1, -1):
        if s + 1 < t.k and shape[s + 1] == shape[s]:
            out[s] = out[s + 1]
        else:
            out[s] = tuple(_kernel.scan_columns(cols[s:])[0])
    return Tableau(tuple(out), t.n)


def scan_trace(t: Tableau) -> list[list[tuple[int, ...]]]:
    """All EWIS passes: one list per start column, in discovery order."""
    traces = []
    for s in range(1, t.k + 1):
        tr: list = []
        scan_column(t, s, trace=tr)
        traces.append(tr)
    return traces


def left_scan_sequence(t: Tableau, limits=None) -> tuple[int, ...]:
    """One right-to-left pass of the left-key method over all of ``t``.

    Starting from the bottom usable entry of the last column, picks in
    each earlier column the largest usable entry that is <= the previous
    pick.  ``limits`` (one usable-prefix length per column) supports the
    dotted-box exclusions; by default the whole tableau is usable.
    """
    if t.k == 0:
        raise EmptySequence("left scan of an empty tableau")
    if limits is None:
        limits = [len(c) for c in t.columns]
    return _left_pass(t.columns, list(limits))


def _left_pass(cols, limits):
    """Single pass of the left-key scan; mutates ``limits`` with the
    dotted-box exclusions.  Returns the picked entries right-to-left."""
    c = len(limits) - 1
    a = cols[c][limits[c] - 1]
    limits[c] -= 1
    picks = [a]
    for j in range(c - 1, -1, -1):
        idx = bisect_right(cols[j], a, 0, limits[j]) - 1
        if idx < 0:
            raise InternalInvariantError(
                "left scan found no entry <= previous pick; input not semistandard?"
            )
        a = cols[j][idx]
        limits[j] = idx
        picks.append(a)
    return tuple(picks)


def left_key(t: Tableau) -> Tableau:
    """The left key of ``t`` by the direct scanning method."""
    out = []
    for c in range(t.k):
        cols = t.columns[: c + 1]
        limits = [len(col) for col in cols]
        col_out = []
        for _ in range(len(t.columns[c])):
            picks = _left_pass(cols, limits)
            col_out.append(picks[-1])
        out.append(tuple(reversed(col_out)))
    return Tableau(tuple(out), t.n)
