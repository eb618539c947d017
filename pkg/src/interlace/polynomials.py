"""Exact univariate polynomials, stability tests, and real-root isolation.

Coefficients are stored leading-first: ``Polynomial([1, -1, -2, 1])`` is
z^3 - z^2 - 2z + 1. All arithmetic is over ``Fraction``; root isolation uses
Sturm sequences evaluated with homogenized integer Horner steps, so no binary
floating point enters any certified statement.

The self-interlacing test rides on a coefficient twist: flipping the sign of
a_k by (-1)^(k(k+1)/2) (pattern +,-,-,+,+,-,-,...) turns the question "do the
real roots alternate in sign with strictly decreasing moduli, largest
positive" into plain Hurwitz stability of the twisted polynomial, which is
decided by leading principal minors of the Hurwitz matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import (
    DegreeZero,
    NotSquarefree,
    PositivityViolated,
    ZeroPolynomial,
)
from .matrices import Matrix, as_fraction


class Polynomial:
    """Immutable dense polynomial over the rationals, leading coefficient first.

    The zero polynomial has an empty coefficient tuple and degree -1; any
    other polynomial has a nonzero leading coefficient after normalization.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        data = [as_fraction(c) for c in coeffs]
        k = 0
        while k < len(data) and data[k] == 0:
            k += 1
        object.__setattr__(self, "coeffs", tuple(data[k:]))

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    # -- basics -------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        """a_k in p(z) = a_0 z^n + a_1 z^(n-1) + ... + a_n; 0 outside 0..n."""
        if 0 <= k <= self.degree:
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        n = self.degree
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = n - k
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                z = "z" if power == 1 else f"z^{power}"
                body = z if mag == 1 else f"{mag}*{z}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    # -- arithmetic -----------------------------------------------------------

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        pad = len(a) - len(b)
        return Polynomial(tuple(a[:pad]) + tuple(x + y for x, y in zip(a[pad:], b)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_fraction(other)
            return Polynomial(c * x for x in self.coeffs)
        if self.is_zero or other.is_zero:
            return Polynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroPolynomial("division by the zero polynomial")
        if self.degree < other.degree:
            return Polynomial(()), self
        rem = list(self.coeffs)
        q: list[Fraction] = []
        lead = other.coeffs[0]
        steps = self.degree - other.degree + 1
        for i in range(steps):
            f = rem[i] / lead
            q.append(f)
            for j, c in enumerate(other.coeffs):
                rem[i + j] -= f * c
        return Polynomial(q), Polynomial(rem[steps:])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        n = self.degree
        if n <= 0:
            return Polynomial(())
        return Polynomial(c * (n - k) for k, c in enumerate(self.coeffs[:-1]))

    def compose_neg(self) -> "Polynomial":
        """p(-z): the coefficient of z^(n-k) picks up (-1)^(n-k)."""
        n = self.degree
        return Polynomial(c if (n - k) % 2 == 0 else -c
                          for k, c in enumerate(self.coeffs))

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial cannot be made monic")
        lead = self.coeffs[0]
        return Polynomial(c / lead for c in self.coeffs)


def poly_from_roots(roots: Iterable) -> Polynomial:
    """Monic polynomial with exactly the given roots (with multiplicity)."""
    p = Polynomial([1])
    for r in roots:
        p = p * Polynomial([1, -as_fraction(r)])
    return p


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd via the Euclidean algorithm (zero if both inputs are zero)."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a if a.is_zero else a.monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    """p divided by gcd(p, p'); same distinct roots, all simple."""
    if p.is_zero:
        raise ZeroPolynomial("zero polynomial has no squarefree part")
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    quotient, rem = divmod(p, g)
    if not rem.is_zero:  # cannot happen: g divides p
        raise ArithmeticError("gcd failed to divide its argument")
    return quotient


# -- coefficient twist and Hurwitz stability ---------------------------------


def _twist_sign(k: int) -> int:
    return -1 if (k * (k + 1) // 2) % 2 else 1


def si_twist(p: Polynomial) -> Polynomial:
    """Twist q_k = (-1)^(k(k+1)/2) a_k, sign pattern +,-,-,+,+,-,-,...

    The twist is an involution: applying it twice returns the original
    polynomial, because k(k+1)/2 + k(k+1)/2 = k(k+1) is always even. A
    polynomial is self-interlacing (largest-modulus root positive) exactly
    when its twist is Hurwitz stable.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot twist the zero polynomial")
    return Polynomial(_twist_sign(k) * c for k, c in enumerate(p.coeffs))


def hurwitz_matrix(p: Polynomial) -> Matrix:
    """The n x n Hurwitz matrix H[i][j] = a_(2j-i), indices 1-based."""
    n = p.degree
    if n < 1:
        raise DegreeZero("Hurwitz matrix needs degree >= 1")
    return Matrix(tuple(p.coefficient(2 * j - i) for j in range(1, n + 1))
                  for i in range(1, n + 1))


def hurwitz_minors(p: Polynomial) -> tuple[Fraction, ...]:
    """Leading principal minors Δ_1..Δ_n of the Hurwitz matrix."""
    h = hurwitz_matrix(p)
    return tuple(h.leading_principal_minor(k) for k in range(1, h.n + 1))


def hurwitz_stable(p: Polynomial) -> bool:
    """All roots in the open left half plane, decided by Hurwitz minors.

    A negative leading coefficient is flipped first (roots unchanged). Any
    coefficient <= 0 after that short-circuits to False: positivity of all
    coefficients is necessary for stability, and the check keeps minor
    evaluation off the hot path for obviously unstable inputs.
    """
    if p.degree < 1:
        raise DegreeZero("stability is undefined for constants")
    if p.coeffs[0] < 0:
        p = -p
    if any(c <= 0 for c in p.coeffs):
        return False
    return all(d > 0 for d in hurwitz_minors(p))


class SIKind(Enum):
    """Which signed alternation pattern a self-interlacing spectrum follows.

    KIND_I: the largest-modulus root is positive and signs alternate as the
    modulus decreases. KIND_II is the mirror image (largest-modulus root
    negative); p(z) has KIND_II exactly when p(-z) has KIND_I.
    """

    KIND_I = "I"
    KIND_II = "II"

    @classmethod
    def parse(cls, text: str) -> "SIKind":
        for kind in cls:
            if kind.value == text.strip().upper():
                return kind
        raise ValueError(f"unknown kind {text!r}; expected I or II")


def is_self_interlacing(p: Polynomial, kind: SIKind = SIKind.KIND_I) -> bool:
    """True when p's real roots follow the strict sign-alternating modulus chain.

    Kind I means λ_1 > -λ_2 > λ_3 > ... > 0 once roots are ordered by
    decreasing modulus; in particular all roots are real, simple, nonzero.
    Decision route: negate if the leading coefficient is negative, reject
    repeated roots via gcd(p, p'), then test Hurwitz stability of the twist.
    """
    if p.degree < 1:
        raise DegreeZero("self-interlacing is undefined for constants")
    if kind is SIKind.KIND_II:
        return is_self_interlacing(p.compose_neg(), SIKind.KIND_I)
    if p.coeffs[0] < 0:
        p = -p
    if poly_gcd(p, p.derivative()).degree >= 1:
        return False
    return hurwitz_stable(si_twist(p))


# -- real-root isolation -------------------------------------------------------


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class RootBox:
    """A certified enclosure of one simple real root.

    Either lo == hi (the root exactly) or p(lo) and p(hi) have opposite
    nonzero signs and the open interval contains exactly one root. Boxes
    produced here never straddle zero, so ``sign`` is the sign of the root.
    """

    lo: Fraction
    hi: Fraction
    sign: int

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def modulus_interval(self) -> tuple[Fraction, Fraction]:
        """Closed interval certainly containing |root|."""
        if self.sign >= 0:
            return (self.lo, self.hi)
        return (-self.hi, -self.lo)

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def _int_coeffs(p: Polynomial) -> tuple[int, ...]:
    m = lcm(*(c.denominator for c in p.coeffs))
    return tuple(int(c * m) for c in p.coeffs)


def _eval_sign(ic: Sequence[int], x: Fraction) -> int:
    """Sign of p(x) using the homogenized integer Horner scheme."""
    u, v = x.numerator, x.denominator
    acc = ic[0]
    vp = 1
    for c in ic[1:]:
        vp *= v
        acc = acc * u + c * vp
    return (acc > 0) - (acc < 0)


def _primitive(ic: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational coefficient list by a positive rational to
    primitive integers (sign pattern preserved)."""
    m = lcm(*(c.denominator for c in ic))
    ints = [int(c * m) for c in ic]
    from math import gcd

    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return tuple(c // g for c in ints)


def _sturm_chain(p: Polynomial) -> list[tuple[int, ...]]:
    """Sturm chain of a squarefree p, each member scaled to primitive ints."""
    chain = [_primitive(p.coeffs)]
    d = p.derivative()
    cur, prev = d, p
    while not cur.is_zero:
        chain.append(_primitive(cur.coeffs))
        prev, cur = cur, -(prev % cur)
    return chain


def _variations(chain: Sequence[Sequence[int]], x: Fraction) -> int:
    signs = [s for s in (_eval_sign(c, x) for c in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _dyadic_root_bound(ic: Sequence[int]) -> Fraction:
    """Power of two strictly exceeding the Cauchy bound 1 + max|a_k|/|a_0|."""
    lead = abs(ic[0])
    tail = max((abs(c) for c in ic[1:]), default=0)
    bound = 1 + Fraction(tail, lead)
    m = 1
    while m <= bound:
        m *= 2
    return Fraction(m)


def isolate_real_roots(p: Polynomial) -> tuple[RootBox, ...]:
    """Disjoint enclosures of every real root, ascending by root value.

    Requires p squarefree (raises NotSquarefree otherwise, naming the gcd).
    Counting is Sturm variation differences; bisection runs on dyadic
    endpoints inside a power-of-two Cauchy bound, so every evaluation is an
    exact integer sign. Boxes that would straddle zero are split at zero so
    each carries a definite root sign.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.degree >= 1:
        raise NotSquarefree(f"repeated roots; gcd(p, p') = {g}")
    if p.degree == 0:
        return ()

    ic = _int_coeffs(p)
    chain = _sturm_chain(p)
    bound = _dyadic_root_bound(ic)

    def var(x: Fraction) -> int:
        return _variations(chain, x)

    raw: list[tuple[Fraction, Fraction]] = []

    def recurse(a: Fraction, b: Fraction, va: int, vb: int):
        count = va - vb
        if count == 0:
            return
        if count == 1:
            raw.append((a, b))
            return
        mid = (a + b) / 2
        if _eval_sign(ic, mid) == 0:
            # exact root at mid; shrink a symmetric gap until it isolates mid
            delta = (b - a) / 4
            while True:
                lo, hi = mid - delta, mid + delta
                if (_eval_sign(ic, lo) != 0 and _eval_sign(ic, hi) != 0
                        and var(lo) - var(hi) == 1):
                    break
                delta /= 2
            raw.append((mid, mid))
            recurse(a, lo, va, var(lo))
            recurse(hi, b, var(hi), vb)
        else:
            vm = var(mid)
            recurse(a, mid, va, vm)
            recurse(mid, b, vm, vb)

    recurse(-bound, bound, var(-bound), var(bound))
    raw.sort(key=lambda box: box[0])

    out: list[RootBox] = []
    for lo, hi in raw:
        if lo == hi:
            out.append(RootBox(lo, hi, _sign(lo)))
        elif lo < 0 < hi:
            s_zero = _eval_sign(ic, Fraction(0))
            if s_zero == 0:
                out.append(RootBox(Fraction(0), Fraction(0), 0))
            elif _eval_sign(ic, lo) * s_zero < 0:
                out.append(RootBox(lo, Fraction(0), -1))
            else:
                out.append(RootBox(Fraction(0), hi, 1))
        else:
            out.append(RootBox(lo, hi, 1 if lo >= 0 else -1))
    return tuple(out)


def refine_root(p: Polynomial, box: RootBox, width_bound) -> RootBox:
    """Bisect a box until its width is <= width_bound (exact hits collapse it)."""
    width_bound = as_fraction(width_bound)
    if width_bound <= 0:
        raise PositivityViolated("width bound must be positive")
    if box.is_exact:
        return box
    ic = _int_coeffs(p)
    lo, hi = box.lo, box.hi
    s_lo = _eval_sign(ic, lo)
    while hi - lo > width_bound:
        mid = (lo + hi) / 2
        s_mid = _eval_sign(ic, mid)
        if s_mid == 0:
            return RootBox(mid, mid, _sign(mid))
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return RootBox(lo, hi, box.sign)
