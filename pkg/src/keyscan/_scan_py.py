"""Pure-Python scanning kernel.

Shares its interface with the optional compiled kernel in
``keyscan._scankernel``: ``scan_columns(cols)`` takes a list of columns
(each a sequence of ints, strictly increasing) and returns the list of
scanning-tableau columns as tuples.
"""

from __future__ import annotations


def scan_start_column(cols, start):
    """Column ``start`` (0-based) of the scanning tableau of ``cols``.

    Repeatedly takes the earliest weakly increasing subsequence of the
    bottom entries of the still-alive boxes in columns ``start..``,
    recording its last member and removing its boxes, until the start
    column is exhausted.  Recorded members are returned top to bottom.
    """
    alive = [len(cols[i]) for i in range(start, len(cols))]
    out = []
    while alive[0] > 0:
        last = -1
        for idx, a in enumerate(alive):
            if a == 0:
                continue
            v = cols[start + idx][a - 1]
            if v >= last:
                last = v
                alive[idx] = a - 1
        out.append(last)
    out.reverse()
    return tuple(out)


def scan_columns(cols):
    return [scan_start_column(cols, s) for s in range(len(cols))]
