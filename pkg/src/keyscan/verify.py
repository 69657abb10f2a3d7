"""Exhaustive small-case verification sweep.

Walks every shape up to a box bound and every semistandard filling up to
an entry bound, and checks the scanning method against the jeu de taquin
oracles plus the structural key/order invariants.  Used by the CLI
``verify`` subcommand and by the acceptance suite.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import jdt, scanning
from .tableau import Tableau, entrywise_leq, enumerate_tableaux


def shapes_up_to(max_boxes: int, max_length: int | None = None):
    """All shapes (weakly decreasing positive tuples) with 1..max_boxes
    boxes; column lengths capped at max_length when given."""

    def parts(total, cap):
        if total == 0:
            yield ()
            return
        for first in range(min(total, cap), 0, -1):
            for rest in parts(total - first, first):
                yield (first,) + rest

    cap0 = max_boxes if max_length is None else max_length
    for m in range(1, max_boxes + 1):
        yield from parts(m, min(m, cap0))


@dataclass
class VerifyReport:
    max_boxes: int
    max_entry: int
    shapes: int = 0
    tableaux: int = 0
    keys: int = 0
    swaps: int = 0
    counterexamples: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "VerifyReport"):
        self.shapes += other.shapes
        self.tableaux += other.tableaux
        self.keys += other.keys
        self.swaps += other.swaps
        self.counterexamples.extend(other.counterexamples)

    def format_lines(self) -> list[str]:
        lines = [
            f"shapes checked: {self.shapes}",
            f"tableaux checked: {self.tableaux}",
            f"keys among them: {self.keys}",
            f"length swaps performed: {self.swaps}",
            f"elapsed: {self.elapsed:.2f}s",
            f"{len(self.counterexamples)} counterexamples",
        ]
        if self.counterexamples:
            lines.append("first counterexample:")
            lines.append(self.counterexamples[0])
        return lines


def check_tableau(t: Tableau, check_swaps: bool = False) -> tuple[list[str], int]:
    """All sweep checks for one tableau; returns failure messages and the
    number of length swaps performed by the oracle."""
    failures = []
    steps: list = []

    def fail(what):
        failures.append(f"{what}\non tableau:\n{t}")

    s = scanning.scanning_tableau(t)
    r = jdt.right_key_oracle(t, collect=steps)
    if s != r:
        fail(f"scanning tableau differs from jdt right key:\n{s}\nvs\n{r}")
    if not s.is_key():
        fail("scanning tableau is not a key")
    if not entrywise_leq(t, s):
        fail("tableau not entrywise <= its right key")
    if scanning.scanning_tableau(t, skip_duplicate_lengths=True) != s:
        fail("duplicate-length fast path disagrees with plain scanning")
    shape = t.shape
    for i in range(1, t.k):
        if shape[i] == shape[i - 1] and s.columns[i] != s.columns[i - 1]:
            fail(f"equal-length columns {i} and {i + 1} of the right key differ")

    lk = scanning.left_key(t)
    lko = jdt.left_key_oracle(t)
    if lk != lko:
        fail(f"scanning left key differs from jdt left key:\n{lk}\nvs\n{lko}")
    if not lk.is_key():
        fail("left key is not a key")
    if not entrywise_leq(lk, t):
        fail("left key not entrywise <= tableau")

    if t.is_key():
        if s != t:
            fail("right key of a key is not the key itself")
        if lk != t:
            fail("left key of a key is not the key itself")

    if t.k:
        e = scanning.ewis(t.bottom_entries())
        if s.columns[0][-1] != e.last:
            fail("bottom of first right-key column is not the last EWIS member")

    for st in steps:
        expected = (
            st.bottom_right_before
            if st.bottom_right_before >= st.bottom_left_before
            else st.bottom_left_before
        )
        if st.bottom_right_after != expected:
            fail(f"two-case bottom-entry rule violated at {st.format_line()}")
        if check_swaps:
            before_rect = jdt.rectify(st.before)
            if not jdt.is_frank(st.before) or not jdt.is_frank(st.after):
                fail(f"frankness lost at {st.format_line()}")
            elif jdt.rectify(st.after) != before_rect:
                fail(f"rectification changed at {st.format_line()}")

    return failures, len(steps)


def _sweep_shape(args):
    shape, max_entry, check_swaps = args
    rep = VerifyReport(0, max_entry, shapes=1)
    for t in enumerate_tableaux(shape, max_entry):
        rep.tableaux += 1
        if t.is_key():
            rep.keys += 1
        failures, nswaps = check_tableau(t, check_swaps)
        rep.swaps += nswaps
        rep.counterexamples.extend(failures)
    return rep


def run_sweep(max_boxes: int, max_entry: int, jobs: int = 1,
              check_swaps: bool = False) -> VerifyReport:
    """Run the full census sweep; counterexample-free iff report.ok."""
    start = time.perf_counter()
    report = VerifyReport(max_boxes, max_entry)
    work = [
        (shape, max_entry, check_swaps)
        for shape in shapes_up_to(max_boxes, max_entry)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for rep in pool.map(_sweep_shape, work):
                report.merge(rep)
    else:
        for item in work:
            report.merge(_sweep_shape(item))
    report.elapsed = time.perf_counter() - start
    return report
