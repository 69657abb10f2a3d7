"""Key polynomials (Demazure characters) and their cross-checking oracles.

Three routes to the same polynomial:

* filter all semistandard tableaux of the shape by comparing their right
  key (scanning method) against the key of the composition w . mu;
* the same filter with the jeu de taquin right-key oracle;
* the isobaric divided-difference recursion along a reduced word of w.

All arithmetic is exact integer arithmetic on sparse exponent maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import jdt, scanning
from .tableau import Tableau, TableauError, conjugate, entrywise_leq, enumerate_tableaux


class EmptyComposition(TableauError):
    pass


class BadDimensions(TableauError):
    pass


@dataclass(frozen=True)
class SparsePolynomial:
    """Integer-coefficient polynomial keyed by exponent vectors.

    ``terms`` maps length-``nvars`` exponent tuples to nonzero integer
    coefficients.
    """

    nvars: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        for mono, coeff in self.terms.items():
            if len(mono) != self.nvars:
                raise BadDimensions(f"monomial {mono} is not of length {self.nvars}")
            if coeff == 0:
                raise ValueError("zero coefficient stored")

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def monomial(cls, exponents, coeff=1):
        exponents = tuple(exponents)
        return cls(len(exponents), {exponents: coeff} if coeff else {})

    def __add__(self, other):
        if self.nvars != other.nvars:
            raise BadDimensions("adding polynomials in different variable counts")
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = terms.get(mono, 0) + coeff
            if new:
                terms[mono] = new
            else:
                terms.pop(mono, None)
        return SparsePolynomial(self.nvars, terms)

    def coefficient(self, exponents) -> int:
        return self.terms.get(tuple(exponents), 0)

    def swap_variables(self, i: int) -> "SparsePolynomial":
        """Exchange variables i and i+1 (1-based i)."""
        out: dict = {}
        for mono, coeff in self.terms.items():
            m = list(mono)
            m[i - 1], m[i] = m[i], m[i - 1]
            key = tuple(m)
            out[key] = out.get(key, 0) + coeff
        return SparsePolynomial(self.nvars, {m: c for m, c in out.items() if c})

    def is_symmetric_in(self, i: int) -> bool:
        return self == self.swap_variables(i)

    def __str__(self):
        return format_polynomial(self)


def format_polynomial(p: SparsePolynomial) -> str:
    """One monomial per line: 'coefficient e_1 ... e_n', exponent vectors
    in descending lexicographic order."""
    lines = [
        " ".join([str(p.terms[mono])] + [str(e) for e in mono])
        for mono in sorted(p.terms, reverse=True)
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def pi_operator(p: SparsePolynomial, i: int) -> SparsePolynomial:
    """Isobaric divided difference: (x_i p - x_{i+1} s_i p) / (x_i - x_{i+1}).

    Applied monomial by monomial via the closed geometric-sum form;
    idempotent, and the identity on polynomials symmetric in x_i, x_{i+1}.
    """
    if not 1 <= i < p.nvars:
        raise BadDimensions(f"operator index {i} outside 1..{p.nvars - 1}")
    terms: dict = {}

    def bump(mono, coeff):
        cur = terms.get(mono, 0) + coeff
        if cur:
            terms[mono] = cur
        else:
            terms.pop(mono, None)

    for mono, coeff in p.terms.items():
        a, b = mono[i - 1], mono[i]
        if a >= b:
            for m in range(b, a + 1):
                bump(mono[: i - 1] + (m, a + b - m) + mono[i + 1 :], coeff)
        else:
            for m in range(a + 1, b):
                bump(mono[: i - 1] + (m, a + b - m) + mono[i + 1 :], -coeff)
    return SparsePolynomial(p.nvars, terms)


# -- compositions and their keys ------------------------------------------


def key_of_composition(parts) -> Tableau:
    """The key tableau whose weight is the given composition: column j
    holds the indices i with parts_i >= j, sorted increasingly."""
    parts = tuple(parts)
    if not parts or all(p == 0 for p in parts):
        raise EmptyComposition("composition needs at least one positive part")
    if any(p < 0 for p in parts):
        raise EmptyComposition(f"negative part in {parts}")
    n = len(parts)
    cols = tuple(
        tuple(i for i in range(1, n + 1) if parts[i - 1] >= j)
        for j in range(1, max(parts) + 1)
    )
    return Tableau(cols, n)


def _check_permutation(w, n):
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise BadDimensions(f"{w} is not a permutation of 1..{len(w)}")
    if len(w) > n:
        raise BadDimensions(f"permutation of {len(w)} letters needs n >= {len(w)}")
    return w + tuple(range(len(w) + 1, n + 1))


def _check_partition(mu, n):
    mu = tuple(p for p in mu if p)
    if any(a < b for a, b in zip(mu, mu[1:])) or any(p < 0 for p in mu):
        raise BadDimensions(f"{mu} is not a partition")
    if len(mu) > n:
        raise BadDimensions(f"partition {mu} has more than n={n} rows")
    return mu


def compose(w, mu, n) -> tuple[int, ...]:
    """The composition w . mu: part w(i) equals mu_i."""
    w = _check_permutation(w, n)
    mu = _check_partition(mu, n)
    c = [0] * n
    for i, p in enumerate(mu):
        c[w[i] - 1] = p
    return tuple(c)


def reduced_word(w, pick_last: bool = False) -> tuple[int, ...]:
    """A reduced word (i_1,...,i_l) with w = s_{i_1} ... s_{i_l}, peeled
    greedily from the first descent (or the last, for a second word)."""
    v = list(w)
    word = []
    while True:
        descents = [i for i in range(1, len(v)) if v[i - 1] > v[i]]
        if not descents:
            break
        i = descents[-1] if pick_last else descents[0]
        v[i - 1], v[i] = v[i], v[i - 1]
        word.append(i)
    return tuple(word)


# -- the three engines -----------------------------------------------------


def schur_polynomial(mu, n: int) -> SparsePolynomial:
    """Sum of the weights of all semistandard tableaux of shape mu
    (mu a partition in row lengths, entries bounded by n)."""
    mu = _check_partition(mu, n)
    total = SparsePolynomial.zero(n)
    for t in enumerate_tableaux(conjugate(mu), n):
        total = total + SparsePolynomial.monomial(t.weight())
    return total


def demazure_character(mu, w, n: int, engine: str = "scan") -> SparsePolynomial:
    """Sum of the weights of the semistandard tableaux of shape mu whose
    right key is entrywise <= the key of the composition w . mu.

    ``engine`` picks how right keys are computed: 'scan' (the direct
    scanning method) or 'oracle' (jeu de taquin length swaps).
    """
    if engine not in ("scan", "oracle"):
        raise ValueError(f"unknown engine {engine!r}")
    c = compose(w, mu, n)
    key = key_of_composition(c)
    right_key = scanning.scanning_tableau if engine == "scan" else jdt.right_key_oracle
    total = SparsePolynomial.zero(n)
    for t in enumerate_tableaux(key.shape, n):
        if entrywise_leq(right_key(t), key):
            total = total + SparsePolynomial.monomial(t.weight())
    return total


def demazure_by_operators(mu, w, n: int, pick_last: bool = False) -> SparsePolynomial:
    """Divided-difference route: apply pi operators along a reduced word
    of w to the monomial x^mu.  Independent of the chosen reduced word."""
    w = _check_permutation(w, n)
    mu = _check_partition(mu, n)
    p = SparsePolynomial.monomial(mu + (0,) * (n - len(mu)))
    for i in reduced_word(w, pick_last):
        p = pi_operator(p, i)
    return p
