"""Certified eigenvalue reports: kind verdicts, root enclosures, sign patterns.

The verdict comes from the coefficient-twist route on the characteristic
polynomial (exact, no numerics); the enclosures come from Sturm isolation on
the squarefree part. For any self-interlacing verdict the two routes must
agree in every detail (count, signs, strict modulus descent), and a mismatch
raises InternalInvariantViolation rather than producing a report: that error
marks a bug, never bad input.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .classification import check_corner_conditions, classify_sign_definite, tnn_violation
from .errors import (
    InternalInvariantViolation,
    ModulusTie,
    NotClassNPlus,
    PreconditionFailed,
)
from .matrices import Matrix, as_fraction, flip_rows
from .polynomials import (
    Polynomial,
    RootBox,
    SIKind,
    is_self_interlacing,
    isolate_real_roots,
    poly_gcd,
    refine_root,
    squarefree_part,
)

DEFAULT_WIDTH_BOUND = Fraction(1, 10 ** 9)


class SpectrumVerdict(Enum):
    KIND_I = "kind_I"
    KIND_II = "kind_II"
    NEITHER = "neither"


@dataclass(frozen=True)
class SpectrumReport:
    """Exact spectral summary of one matrix.

    ``boxes`` encloses each *distinct* real eigenvalue once (isolation runs
    on the squarefree part of the characteristic polynomial), sorted by
    decreasing modulus. The order is certified (pairwise disjoint modulus
    intervals) exactly when ``modulus_tie`` is False; with a tie the order is
    best-effort and no strict-ordering claim is made. ``modulus_tie`` is set
    when eigenvalues tie in modulus algebraically: a ±λ pair (nontrivial
    gcd of p(z) and p(-z) after stripping powers of z) or a repeated
    eigenvalue (p not squarefree). Certified self-interlacing verdicts are
    incompatible with ties, so every accepted spectrum has simple real
    nonzero eigenvalues and multiplicity 1 per box.
    """

    char_poly: Polynomial
    verdict: SpectrumVerdict
    boxes: tuple[RootBox, ...]
    signs: tuple[int, ...]
    modulus_tie: bool
    squarefree: bool
    width_bound: Fraction

    @property
    def degree(self) -> int:
        return self.char_poly.degree

    @property
    def distinct_real_roots(self) -> int:
        return len(self.boxes)


def _has_pm_pair(p: Polynomial) -> bool:
    """True when p(z) and p(-z) share a factor other than a power of z."""
    g = poly_gcd(p, p.compose_neg())
    coeffs = list(g.coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return len(coeffs) > 1


def _modulus_overlap(a: RootBox, b: RootBox) -> bool:
    alo, ahi = a.modulus_interval
    blo, bhi = b.modulus_interval
    return alo <= bhi and blo <= ahi


def _certified_modulus_sort(sf: Polynomial, boxes: list[RootBox]) -> list[RootBox]:
    """Refine boxes until all modulus intervals are pairwise disjoint, then
    sort by strictly decreasing modulus. Requires that no two enclosed roots
    share a modulus (the caller has excluded ties)."""
    boxes = list(boxes)
    while True:
        clash = None
        for i in range(len(boxes)):
            for j in range(i + 1, len(boxes)):
                if _modulus_overlap(boxes[i], boxes[j]):
                    clash = (i, j)
                    break
            if clash:
                break
        if clash is None:
            break
        i, j = clash
        for k in (i, j):
            box = boxes[k]
            if not box.is_exact:
                boxes[k] = refine_root(sf, box, box.width / 2)
        if boxes[i].is_exact and boxes[j].is_exact:
            if _modulus_overlap(boxes[i], boxes[j]):  # equal moduli: a true tie
                raise InternalInvariantViolation(
                    "tie detection missed equal-modulus roots")
    boxes.sort(key=lambda b: b.modulus_interval[0], reverse=True)
    return boxes


def _expected_signs(verdict: SpectrumVerdict, count: int) -> tuple[int, ...]:
    lead = 1 if verdict is SpectrumVerdict.KIND_I else -1
    return tuple(lead * (-1) ** k for k in range(count))


def spectrum_report(m: Matrix, width_bound=DEFAULT_WIDTH_BOUND) -> SpectrumReport:
    """Classify the spectrum of ``m`` and enclose its real eigenvalues.

    The verdict is decided exactly on the characteristic polynomial; the
    boxes are then refined to ``width_bound`` and, absent modulus ties,
    refined further until the modulus order is certified. Self-interlacing
    verdicts are cross-checked against the enclosures before the report is
    returned.
    """
    width_bound = as_fraction(width_bound)
    p = m.charpoly()
    sf = squarefree_part(p)
    squarefree = sf == p
    tie = _has_pm_pair(p) or not squarefree

    if is_self_interlacing(p, SIKind.KIND_I):
        verdict = SpectrumVerdict.KIND_I
    elif is_self_interlacing(p, SIKind.KIND_II):
        verdict = SpectrumVerdict.KIND_II
    else:
        verdict = SpectrumVerdict.NEITHER

    boxes = [refine_root(sf, box, width_bound) for box in isolate_real_roots(sf)]
    if not tie:
        boxes = _certified_modulus_sort(sf, boxes)
    else:
        boxes.sort(key=lambda b: (abs(b.midpoint), b.sign), reverse=True)
    signs = tuple(box.sign for box in boxes)

    if verdict is not SpectrumVerdict.NEITHER:
        chain_ok = (not tie and squarefree
                    and len(boxes) == p.degree
                    and signs == _expected_signs(verdict, len(boxes))
                    and all(box.sign != 0 for box in boxes))
        if not chain_ok:
            raise InternalInvariantViolation(
                f"twist route says {verdict.value} but enclosures disagree: "
                f"{len(boxes)} real roots of degree {p.degree}, signs {signs}")
    return SpectrumReport(p, verdict, tuple(boxes), signs, tie, squarefree,
                          width_bound)


def verify_sign_pattern(m: Matrix, width_bound=DEFAULT_WIDTH_BOUND) -> bool:
    """Check sign(λ_k) = ε_k/ε_(k-1) against the certified spectrum.

    Requires the sign classification to land in class n+ (raises
    NotClassNPlus otherwise) and strictly separated moduli (raises
    ModulusTie). λ_k is the k-th eigenvalue by decreasing modulus and ε is
    the minor signature with ε_0 = 1.
    """
    cls = classify_sign_definite(m)
    if not cls.is_class_n_plus:
        raise NotClassNPlus(f"verdict {cls.verdict.value}")
    report = spectrum_report(m, width_bound)
    if report.modulus_tie:
        raise ModulusTie("eigenvalue moduli are not strictly separated")
    eps = cls.signature
    if any(e is None for e in eps) or len(report.boxes) != m.n:
        raise InternalInvariantViolation(
            "class n+ matrix without a determined signature or full real spectrum")
    predicted = []
    prev = 1
    for e in eps:
        predicted.append(e * prev)  # ε_k / ε_(k-1) for signs in {-1, +1}
        prev = e
    return list(report.signs) == predicted


def kind_two_report(m: Matrix, width_bound=DEFAULT_WIDTH_BOUND) -> SpectrumReport:
    """Certify a kind-II spectrum for the row flip JA of a matrix whose
    negation is totally nonnegative.

    Preconditions (each raising PreconditionFailed with the failing check):
    -A totally nonnegative; A nonsingular; corner conditions hold for -A on
    the left side. The returned report is for JA and must come back kind II.
    """
    neg = -m
    viol = tnn_violation(neg)
    if viol is not None:
        sel, val = viol
        raise PreconditionFailed(
            "negated_totally_nonnegative",
            f"minor rows={sel.rows} cols={sel.cols} of -A is {val}")
    if m.det() == 0:
        raise PreconditionFailed("nonsingular", "determinant = 0")
    corners = check_corner_conditions(neg)
    if not corners.left_holds:
        raise PreconditionFailed(
            "corner_conditions",
            f"no witness for i in {corners.failing_indices('left')}")
    report = spectrum_report(flip_rows(m), width_bound)
    if report.verdict is not SpectrumVerdict.KIND_II:
        raise InternalInvariantViolation(
            f"flip of a negated-totally-nonnegative matrix reported "
            f"{report.verdict.value}, expected kind II")
    return report
