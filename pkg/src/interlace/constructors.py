"""Builders for the structured matrix families and seeded random generators.

The anti-bidiagonal family lays its parameters along the zigzag path from
corner (n,1) up to corner (1,n), carrying c_n,...,c_2, a, b_2,...,b_n in that
order; its spectrum matches the tridiagonal matrix with diagonal
(a, 0, ..., 0), superdiagonal (b_2..b_n) and subdiagonal (c_2..c_n), which
only sees the products b_j*c_j.

Random generation goes through products of elementary bidiagonal factors
(nonnegative parameters), so outputs are totally nonnegative by construction
(Cauchy-Binet); each generator still re-certifies its advertised contract
after building and raises InternalInvariantViolation instead of returning an
uncertified matrix. The parameter stream comes from a fixed 64-bit generator
so runs reproduce across platforms and implementations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, InternalInvariantViolation, PositivityViolated
from .matrices import Matrix, as_fraction, flip_cols, identity


@dataclass(frozen=True)
class AntiBidiagonalSpec:
    """Zigzag parameters: corner value ``a`` and positive ladders b_2..b_n
    (``sup``) and c_2..c_n (``sub``); n = len(sup) + 1."""

    a: Fraction
    sup: tuple[Fraction, ...]
    sub: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "sup", tuple(as_fraction(x) for x in self.sup))
        object.__setattr__(self, "sub", tuple(as_fraction(x) for x in self.sub))
        if len(self.sup) != len(self.sub):
            raise DimensionMismatch("need as many b as c parameters")
        if self.a <= 0 or any(x <= 0 for x in self.sup + self.sub):
            raise PositivityViolated("anti-bidiagonal parameters must be > 0")

    @property
    def n(self) -> int:
        return len(self.sup) + 1


@dataclass(frozen=True)
class JacobiSpec:
    """Tridiagonal parameters: diagonal a_1..a_n, superdiagonal b_1..b_(n-1),
    subdiagonal c_1..c_(n-1). Sign constraints are imposed by the criteria
    that consume the spec, not here."""

    diag: tuple[Fraction, ...]
    sup: tuple[Fraction, ...]
    sub: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(as_fraction(x) for x in self.diag))
        object.__setattr__(self, "sup", tuple(as_fraction(x) for x in self.sup))
        object.__setattr__(self, "sub", tuple(as_fraction(x) for x in self.sub))
        if not self.diag:
            raise DimensionMismatch("need at least one diagonal entry")
        if len(self.sup) != len(self.diag) - 1 or len(self.sub) != len(self.diag) - 1:
            raise DimensionMismatch(
                f"off-diagonals must have length {len(self.diag) - 1}")

    @property
    def n(self) -> int:
        return len(self.diag)


def bidiagonal_upper(diag, sup) -> Matrix:
    """Upper bidiagonal matrix with positive diagonal and superdiagonal.

    Positivity is required because these factors feed corner-condition
    arguments that need strictly positive products along both diagonals.
    """
    d = [as_fraction(x) for x in diag]
    e = [as_fraction(x) for x in sup]
    n = len(d)
    if n < 1 or len(e) != n - 1:
        raise DimensionMismatch(f"superdiagonal must have length {n - 1}")
    if any(x <= 0 for x in d) or any(x <= 0 for x in e):
        raise PositivityViolated("bidiagonal entries must be > 0")
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = d[i]
        if i + 1 < n:
            rows[i][i + 1] = e[i]
    return Matrix(rows)


def anti_bidiagonal(spec: AntiBidiagonalSpec) -> Matrix:
    """Lay c_n..c_2, a, b_2..b_n along the zigzag from (n,1) to (1,n)."""
    n = spec.n
    values = list(reversed(spec.sub)) + [spec.a] + list(spec.sup)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for t, v in enumerate(values):
        i = n - t // 2
        j = 1 + (t + 1) // 2
        rows[i - 1][j - 1] = v
    return Matrix(rows)


def equivalent_tridiagonal(spec: AntiBidiagonalSpec) -> Matrix:
    """Tridiagonal companion with the same characteristic polynomial:
    diagonal (a, 0, ..., 0), superdiagonal b_2..b_n, subdiagonal c_2..c_n."""
    diag = (spec.a,) + (Fraction(0),) * (spec.n - 1)
    return jacobi_matrix(JacobiSpec(diag, spec.sup, spec.sub))


def jacobi_matrix(spec: JacobiSpec) -> Matrix:
    n = spec.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = spec.diag[i]
        if i + 1 < n:
            rows[i][i + 1] = spec.sup[i]
            rows[i + 1][i] = spec.sub[i]
    return Matrix(rows)


def anti_jacobi(spec: JacobiSpec) -> Matrix:
    """Column-reversed tridiagonal M_J * J; row 1 reads (0,...,0,b_1,a_1)."""
    return flip_cols(jacobi_matrix(spec))


# -- seeded randomness -----------------------------------------------------------

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Fixed 64-bit stream used by every random constructor.

    state += 0x9E3779B97F4A7C15; z = state; z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9; z ^= z >> 27; z *= 0x94D049BB133111EB;
    z ^= z >> 31; all arithmetic mod 2^64. ``below(k)`` reduces by plain
    modulo (the tiny bias is irrelevant for test-corpus generation and keeps
    the stream trivially reproducible in any language).
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
        return (z ^ (z >> 31)) & _MASK64

    def below(self, bound: int) -> int:
        if bound < 1:
            raise PositivityViolated("bound must be >= 1")
        return self.next_u64() % bound


def _elementary_lower(n: int, i: int, v: Fraction) -> Matrix:
    rows = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    rows[i][i - 1] = v  # entry (i+1, i) in 1-based terms
    return Matrix(rows)


def _elementary_upper(n: int, i: int, v: Fraction) -> Matrix:
    rows = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    rows[i - 1][i] = v
    return Matrix(rows)


def _ladder_product(n: int, lower: list[Fraction], diag: list[Fraction],
                    upper: list[Fraction]) -> Matrix:
    """Product of elementary factors in documented order.

    ``lower`` and ``upper`` each hold (n-1)^2 parameters consumed round by
    round (rounds r = 1..n-1; lower positions i = 1..n-1 ascending, upper
    positions descending). The result is L * D * U with L the lower factors
    multiplied in draw order (parameter at entry (i+1, i)), D the positive
    diagonal, U the upper factors in draw order (parameter at (i, i+1)).
    """
    acc = identity(n)
    idx = 0
    for _round in range(n - 1):
        for i in range(1, n):
            v = lower[idx]
            idx += 1
            if v:
                acc = acc * _elementary_lower(n, i, v)
    acc = acc * Matrix([[diag[r] if r == c else Fraction(0) for c in range(n)]
                        for r in range(n)])
    idx = 0
    for _round in range(n - 1):
        for i in range(n - 1, 0, -1):
            v = upper[idx]
            idx += 1
            if v:
                acc = acc * _elementary_upper(n, i, v)
    return acc


def _draw_many(rng: SplitMix64, count: int, lo: int, hi: int) -> list[Fraction]:
    return [Fraction(lo + rng.below(hi - lo + 1)) for _ in range(count)]


def random_tnn(n: int, seed: int) -> Matrix:
    """Seeded totally nonnegative matrix; zero parameters (and hence singular
    outputs) allowed. Certified by a full post-hoc minor scan."""
    if n < 1:
        raise DimensionMismatch("size must be >= 1")
    rng = SplitMix64(seed)
    k = (n - 1) * (n - 1)
    lower = _draw_many(rng, k, 0, 3)
    diag = _draw_many(rng, n, 0, 3)
    upper = _draw_many(rng, k, 0, 3)
    m = _ladder_product(n, lower, diag, upper)
    from .classification import is_totally_nonnegative

    if not is_totally_nonnegative(m):
        raise InternalInvariantViolation("ladder product with nonnegative "
                                         "parameters must be totally nonnegative")
    return m


def random_positive_tnn(n: int, seed: int) -> Matrix:
    """Seeded nonsingular totally nonnegative matrix with all entries > 0.

    Every ladder parameter is strictly positive; the result is checked for
    positive entries and nonzero determinant before being returned.
    """
    if n < 1:
        raise DimensionMismatch("size must be >= 1")
    rng = SplitMix64(seed)
    k = (n - 1) * (n - 1)
    lower = _draw_many(rng, k, 1, 3)
    diag = _draw_many(rng, n, 1, 3)
    upper = _draw_many(rng, k, 1, 3)
    m = _ladder_product(n, lower, diag, upper)
    if any(x <= 0 for _, _, x in m.entries()) or m.det() == 0:
        raise InternalInvariantViolation("positive ladder must give positive "
                                         "entries and a nonzero determinant")
    return m


def random_oscillatory(n: int, seed: int) -> Matrix:
    """Seeded oscillatory matrix: the first ladder round is forced strictly
    positive (which pins both off-diagonals of the product away from zero),
    later rounds may contribute zeros. Certified by the oscillation criterion."""
    if n < 1:
        raise DimensionMismatch("size must be >= 1")
    rng = SplitMix64(seed)
    k = (n - 1) * (n - 1)
    lower = _draw_many(rng, min(n - 1, k), 1, 3) + _draw_many(rng, max(0, k - (n - 1)), 0, 3)
    diag = _draw_many(rng, n, 1, 3)
    upper = _draw_many(rng, min(n - 1, k), 1, 3) + _draw_many(rng, max(0, k - (n - 1)), 0, 3)
    m = _ladder_product(n, lower, diag, upper)
    from .classification import is_oscillatory

    if not is_oscillatory(m):
        raise InternalInvariantViolation("forced-positive first round must "
                                         "yield an oscillatory product")
    return m
