import random

import pytest

from keyscan.tableau import SkewTableau, Tableau, parse_tableau

EXAMPLE_T_TEXT = """\
1 1 3 4 6
2 3 5 7 9
4 5 6 8
5 7 9
7
8
"""

EXAMPLE_KEY_TEXT = """\
1 6 6 6 6
4 7 7 7 9
6 8 8 9
7 9 9
8
9
"""


@pytest.fixture
def example_t() -> Tableau:
    return parse_tableau(EXAMPLE_T_TEXT)


@pytest.fixture
def example_key() -> Tableau:
    return parse_tableau(EXAMPLE_KEY_TEXT)


def random_skew(rng: random.Random, max_boxes=8, max_entry=6) -> SkewTableau:
    """A random legal skew tableau with at most max_boxes boxes."""
    while True:
        k = rng.randint(1, 4)
        lengths = sorted((rng.randint(1, 3) for _ in range(k)), reverse=True)
        if sum(lengths) > max_boxes:
            continue
        offsets = sorted((rng.randint(0, 2) for _ in range(k)), reverse=True)
        cols = []
        ok = True
        for c in range(k):
            col = []
            for i in range(lengths[c]):
                r = offsets[c] + i
                lo = col[-1] + 1 if col else 1
                if c and offsets[c - 1] <= r < offsets[c - 1] + lengths[c - 1]:
                    lo = max(lo, cols[c - 1][1][r - offsets[c - 1]])
                if lo > max_entry:
                    ok = False
                    break
                col.append(rng.randint(lo, max_entry))
            if not ok:
                break
            cols.append((offsets[c], tuple(col)))
        if ok:
            return SkewTableau(tuple(cols))
