"""Minor-based sign classification and oscillation criteria.

All checks scan exact minors in a fixed lexicographic order (rows outer,
columns inner), so the first witness reported for any failure is
deterministic. Verdicts form a hierarchy: strictly sign definite implies
class n+ (power exponent 1), which implies sign definite of class n.

A key consumer is the flip certificate: multiplying a totally nonnegative A
by the anti-identity J gives B = JA (or C = AJ) whose nonzero order-k minors
all carry the sign (-1)^(k(k-1)/2); under corner conditions on the entries,
B gets a self-interlacing spectrum. Each stage of that chain is certified
separately and the pipeline stops at the first failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import NonnegativityViolated, PositivityViolated
from .matrices import Matrix, MinorSelector, flip_cols, flip_rows

Signature = tuple[Optional[int], ...]


def jflip_signature(n: int) -> tuple[int, ...]:
    """Target signature ε_k = (-1)^(k(k-1)/2) (+,-,-,+,+,-,-,...) for k=1..n."""
    return tuple(-1 if (k * (k - 1) // 2) % 2 else 1 for k in range(1, n + 1))


class SignVerdict(Enum):
    NOT_SIGN_DEFINITE = "not_sign_definite"
    SIGN_DEFINITE_CLASS_N = "sign_definite_class_n"
    CLASS_N_PLUS = "class_n_plus"
    STRICTLY_SIGN_DEFINITE = "strictly_sign_definite"


@dataclass(frozen=True)
class SignConflict:
    """First pair of same-order minors with opposite strict signs."""

    order: int
    positive: tuple[MinorSelector, Fraction]
    negative: tuple[MinorSelector, Fraction]


@dataclass(frozen=True)
class SignClassification:
    """Outcome of the sign-definiteness scan.

    ``signature[k-1]`` is the shared sign of nonzero order-k minors (None if
    every order-k minor vanishes, or undetermined past a conflict).
    ``power_exponent`` is the least m with M^m strictly sign definite when
    the class n+ search succeeded; a missing exponent with verdict
    SIGN_DEFINITE_CLASS_N means "not certified within power_cap", not a
    definitive negative.
    """

    verdict: SignVerdict
    signature: Signature
    conflict: Optional[SignConflict]
    power_exponent: Optional[int]
    power_cap: int

    @property
    def is_sign_definite(self) -> bool:
        return self.verdict is not SignVerdict.NOT_SIGN_DEFINITE

    @property
    def is_class_n_plus(self) -> bool:
        return self.verdict in (SignVerdict.CLASS_N_PLUS,
                                SignVerdict.STRICTLY_SIGN_DEFINITE)


def _order_sign_scan(m: Matrix, order: int):
    """(epsilon, first_pos, first_neg, saw_zero) for one minor order.

    Stops as soon as both strict signs have appeared.
    """
    first_pos = first_neg = None
    saw_zero = False
    for sel, val in m.minors(order):
        if val > 0:
            if first_pos is None:
                first_pos = (sel, val)
        elif val < 0:
            if first_neg is None:
                first_neg = (sel, val)
        else:
            saw_zero = True
        if first_pos is not None and first_neg is not None:
            return None, first_pos, first_neg, saw_zero
    if first_pos is not None:
        return 1, first_pos, None, saw_zero
    if first_neg is not None:
        return -1, None, first_neg, saw_zero
    return None, None, None, saw_zero


def _strictly_sign_definite(m: Matrix) -> bool:
    """Every minor nonzero and, per order, of one shared sign (short-circuit)."""
    for order in range(1, m.n + 1):
        shared = 0
        for _, val in m.minors(order):
            if val == 0:
                return False
            s = 1 if val > 0 else -1
            if shared == 0:
                shared = s
            elif s != shared:
                return False
    return True


def default_power_cap(n: int) -> int:
    """2(n-1), floored at 1 so 1x1 inputs still get a power-1 search."""
    return max(1, 2 * (n - 1))


def classify_sign_definite(m: Matrix, power_cap: Optional[int] = None) -> SignClassification:
    """Classify minor sign consistency and search powers for strictness.

    Scans orders k = 1..n; a strict sign conflict at any order yields
    NOT_SIGN_DEFINITE with the first conflicting pair as witness. If no
    order conflicts and no minor vanishes the matrix is strictly sign
    definite (power exponent 1). Otherwise powers M^m for m = 2..power_cap
    are tested for strict sign definiteness; the least hit certifies class
    n+. Exhausting the cap leaves the verdict at SIGN_DEFINITE_CLASS_N.
    """
    n = m.n
    cap = default_power_cap(n) if power_cap is None else power_cap
    if cap < 1:
        raise PositivityViolated("power cap must be >= 1")

    signature: list[Optional[int]] = []
    saw_zero_any = False
    for order in range(1, n + 1):
        eps, first_pos, first_neg, saw_zero = _order_sign_scan(m, order)
        saw_zero_any = saw_zero_any or saw_zero
        if first_pos is not None and first_neg is not None:
            conflict = SignConflict(order, first_pos, first_neg)
            sig = tuple(signature) + (None,) * (n - order + 1)
            return SignClassification(SignVerdict.NOT_SIGN_DEFINITE, sig,
                                      conflict, None, cap)
        signature.append(eps)

    sig = tuple(signature)
    if not saw_zero_any and all(e is not None for e in sig):
        return SignClassification(SignVerdict.STRICTLY_SIGN_DEFINITE, sig,
                                  None, 1, cap)
    for exponent in range(2, cap + 1):
        if _strictly_sign_definite(m ** exponent):
            return SignClassification(SignVerdict.CLASS_N_PLUS, sig,
                                      None, exponent, cap)
    return SignClassification(SignVerdict.SIGN_DEFINITE_CLASS_N, sig,
                              None, None, cap)


# -- total nonnegativity / positivity ----------------------------------------


def tnn_violation(m: Matrix) -> Optional[tuple[MinorSelector, Fraction]]:
    """First negative minor in enumeration order, or None if all >= 0."""
    for order in range(1, m.n + 1):
        for sel, val in m.minors(order):
            if val < 0:
                return sel, val
    return None


def is_totally_nonnegative(m: Matrix) -> bool:
    return tnn_violation(m) is None


def stp_violation(m: Matrix) -> Optional[tuple[MinorSelector, Fraction]]:
    """First minor <= 0 in enumeration order, or None if all > 0."""
    for order in range(1, m.n + 1):
        for sel, val in m.minors(order):
            if val <= 0:
                return sel, val
    return None


def is_strictly_totally_positive(m: Matrix) -> bool:
    return stp_violation(m) is None


def is_oscillatory(m: Matrix) -> bool:
    """Criterion route: totally nonnegative, nonsingular, and both
    off-diagonals strictly positive (entries (j, j+1) and (j+1, j))."""
    n = m.n
    for j in range(1, n):
        if m[j, j + 1] <= 0 or m[j + 1, j] <= 0:
            return False
    if m.det() == 0:
        return False
    return is_totally_nonnegative(m)


def is_oscillatory_by_definition(m: Matrix, power_cap: Optional[int] = None) -> bool:
    """Definitional route: totally nonnegative with some power strictly
    totally positive. A cap of n-1 (floored at 1) is decisive: when any
    power works, the (n-1)-th already does."""
    cap = max(1, m.n - 1) if power_cap is None else power_cap
    if cap < 1:
        raise PositivityViolated("power cap must be >= 1")
    if not is_totally_nonnegative(m):
        return False
    power = m
    for exponent in range(1, cap + 1):
        if exponent > 1:
            power = power * m
        if is_strictly_totally_positive(power):
            return True
    return False


# -- corner conditions ----------------------------------------------------------


@dataclass(frozen=True)
class CornerConditionReport:
    """Entrywise witnesses for the two corner-product conditions.

    For each i = 1..n-1, ``left[i-1]`` holds (r1, r2) with
    a(n-i, r1)*a(n+1-r1, i) > 0 and a(n+1-i, r2)*a(n+1-r2, i+1) > 0, or None
    when no witness exists; these govern the row-flipped product JA.
    ``right`` mirrors the products for AJ: a(i, n+1-r1)*a(r1, n-i) > 0 and
    a(i+1, n+1-r2)*a(r2, n+1-i) > 0. Witnesses are the smallest valid r.
    """

    n: int
    left: tuple[Optional[tuple[int, int]], ...]
    right: tuple[Optional[tuple[int, int]], ...]

    @property
    def left_holds(self) -> bool:
        return all(w is not None for w in self.left)

    @property
    def right_holds(self) -> bool:
        return all(w is not None for w in self.right)

    def holds(self, side: str) -> bool:
        return self.left_holds if side == "left" else self.right_holds

    def failing_indices(self, side: str) -> tuple[int, ...]:
        wits = self.left if side == "left" else self.right
        return tuple(i + 1 for i, w in enumerate(wits) if w is None)


def _first_r(n: int, predicate) -> Optional[int]:
    for r in range(1, n + 1):
        if predicate(r):
            return r
    return None


def check_corner_conditions(m: Matrix) -> CornerConditionReport:
    """Evaluate both corner conditions on an entrywise-nonnegative matrix.

    For n = 1 there is no i to check and both sides hold vacuously.
    """
    n = m.n
    for i, j, x in m.entries():
        if x < 0:
            raise NonnegativityViolated(f"entry ({i},{j}) = {x} is negative")

    left: list[Optional[tuple[int, int]]] = []
    right: list[Optional[tuple[int, int]]] = []
    for i in range(1, n):
        l1 = _first_r(n, lambda r: m[n - i, r] * m[n + 1 - r, i] > 0)
        l2 = _first_r(n, lambda r: m[n + 1 - i, r] * m[n + 1 - r, i + 1] > 0)
        left.append((l1, l2) if l1 is not None and l2 is not None else None)
        r1 = _first_r(n, lambda r: m[i, n + 1 - r] * m[r, n - i] > 0)
        r2 = _first_r(n, lambda r: m[i + 1, n + 1 - r] * m[r, n + 1 - i] > 0)
        right.append((r1, r2) if r1 is not None and r2 is not None else None)
    return CornerConditionReport(n, tuple(left), tuple(right))


# -- flip certificate ------------------------------------------------------------


@dataclass(frozen=True)
class StageResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""


@dataclass(frozen=True)
class JFlipCertificate:
    """Staged certificate that a flip JA (or AJ) has a kind-I spectrum.

    Stages run in order and stop at the first failure (later stages are
    recorded as skipped): entrywise minors nonnegative; nonsingular; corner
    conditions for the requested side; the square of the flip oscillatory;
    sign classification lands in class n+ with the alternating-pairs
    signature; spectrum certified kind I. ``flipped`` is always populated
    (it is just a row or column reversal), ``classification`` and
    ``spectrum`` only once their stages ran.
    """

    side: str
    matrix: Matrix
    flipped: Matrix
    stages: tuple[StageResult, ...]
    classification: Optional[SignClassification]
    spectrum: object  # Optional[SpectrumReport]; typed loosely to avoid an import cycle

    @property
    def passed(self) -> bool:
        return all(s.status == "pass" for s in self.stages)

    @property
    def failed_stage(self) -> Optional[str]:
        for s in self.stages:
            if s.status == "fail":
                return s.name
        return None


_JFLIP_STAGES = ("totally_nonnegative", "nonsingular", "corner_conditions",
                 "flip_square_oscillatory", "sign_classification", "spectrum")


def jflip_si_certificate(m: Matrix, side: str = "left",
                         power_cap: Optional[int] = None,
                         width_bound=Fraction(1, 10 ** 9)) -> JFlipCertificate:
    """Run the full flip pipeline on A and certify each stage.

    side "left" forms B = JA (row reversal), side "right" forms C = AJ
    (column reversal); the corner condition checked matches the side.
    """
    from .spectra import spectrum_report, SpectrumVerdict

    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    flipped = flip_rows(m) if side == "left" else flip_cols(m)
    stages: list[StageResult] = []
    classification: Optional[SignClassification] = None
    spectrum = None

    def skip_rest():
        done = {s.name for s in stages}
        for name in _JFLIP_STAGES:
            if name not in done:
                stages.append(StageResult(name, "skipped"))

    viol = tnn_violation(m)
    if viol is not None:
        sel, val = viol
        stages.append(StageResult("totally_nonnegative", "fail",
                                  f"minor rows={sel.rows} cols={sel.cols} = {val}"))
        skip_rest()
        return JFlipCertificate(side, m, flipped, tuple(stages), None, None)
    stages.append(StageResult("totally_nonnegative", "pass"))

    det = m.det()
    if det == 0:
        stages.append(StageResult("nonsingular", "fail", "determinant = 0"))
        skip_rest()
        return JFlipCertificate(side, m, flipped, tuple(stages), None, None)
    stages.append(StageResult("nonsingular", "pass", f"determinant = {det}"))

    corners = check_corner_conditions(m)
    if not corners.holds(side):
        failing = corners.failing_indices(side)
        stages.append(StageResult("corner_conditions", "fail",
                                  f"no witness for i in {failing}"))
        skip_rest()
        return JFlipCertificate(side, m, flipped, tuple(stages), None, None)
    stages.append(StageResult("corner_conditions", "pass"))

    if not is_oscillatory(flipped * flipped):
        stages.append(StageResult("flip_square_oscillatory", "fail",
                                  "square of the flip fails the oscillation criterion"))
        skip_rest()
        return JFlipCertificate(side, m, flipped, tuple(stages), None, None)
    stages.append(StageResult("flip_square_oscillatory", "pass"))

    classification = classify_sign_definite(flipped, power_cap)
    target = jflip_signature(m.n)
    if not classification.is_class_n_plus:
        stages.append(StageResult(
            "sign_classification", "fail",
            f"verdict {classification.verdict.value}"
            f" (power cap {classification.power_cap})"))
        skip_rest()
        return JFlipCertificate(side, m, flipped, tuple(stages), classification, None)
    if tuple(classification.signature) != target:
        stages.append(StageResult(
            "sign_classification", "fail",
            f"signature {classification.signature} != expected {target}"))
        skip_rest()
        return JFlipCertificate(side, m, flipped, tuple(stages), classification, None)
    stages.append(StageResult(
        "sign_classification", "pass",
        f"class n+ at power {classification.power_exponent}"))

    spectrum = spectrum_report(flipped, width_bound)
    if spectrum.verdict is SpectrumVerdict.KIND_I:
        stages.append(StageResult("spectrum", "pass",
                                  f"kind I, {len(spectrum.boxes)} real roots"))
    else:
        stages.append(StageResult("spectrum", "fail",
                                  f"verdict {spectrum.verdict.value}"))
    return JFlipCertificate(side, m, flipped, tuple(stages), classification, spectrum)


# -- tridiagonal criteria ---------------------------------------------------------


def jacobi_oscillatory_criterion(spec) -> bool:
    """Positive off-diagonals given, decide oscillation by leading minors.

    Requires every b_k > 0 and c_k > 0 (raises otherwise); returns True
    exactly when all leading principal minors of the tridiagonal matrix are
    strictly positive.
    """
    from .constructors import jacobi_matrix

    if any(x <= 0 for x in spec.sup) or any(x <= 0 for x in spec.sub):
        raise PositivityViolated("off-diagonal entries must be strictly positive")
    m = jacobi_matrix(spec)
    return all(m.leading_principal_minor(k) > 0 for k in range(1, m.n + 1))


def anti_tridiagonal_criterion(spec) -> bool:
    """Same decision through the flipped route, kept deliberately separate.

    Builds each leading principal block M^(k), reverses its columns (M^(k) J),
    and requires (-1)^(k(k-1)/2) det(M^(k) J) > 0 for k = 1..n. The dual route
    exists so the two criteria can be cross-checked against each other; do not
    fold it into the plain minor test.
    """
    from .constructors import jacobi_matrix

    if any(x <= 0 for x in spec.sup) or any(x <= 0 for x in spec.sub):
        raise PositivityViolated("off-diagonal entries must be strictly positive")
    m = jacobi_matrix(spec)
    for k in range(1, m.n + 1):
        sel = MinorSelector(tuple(range(1, k + 1)), tuple(range(1, k + 1)))
        block = m.submatrix(sel)
        signed = flip_cols(block).det()
        if (-1 if (k * (k - 1) // 2) % 2 else 1) * signed <= 0:
            return False
    return True
