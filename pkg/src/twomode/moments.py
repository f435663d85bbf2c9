"""Closed-form moment sums for fixed-total states and the dual-engine machinery.

For a state ``sum_n c_n |n>|M-n>`` the single-mode moments have closed-form
series

    <a1^dag^k a1^l> = sum_n c_n c_(n-l+k) [n! (n-l+k)! / ((n-l)!)^2]^(1/2)
    <a2^dag^k a2^l> = sum_n c_n c_(n+l-k) [(M-n)! (M-n-l+k)! / ((M-n-l)!)^2]^(1/2)

with mode-1 bounds n = l..M (l >= k) or n = l..M-(k-l) (l < k), and mode-2
bounds n = 0..M-l (l >= k) or n = k-l..M-l (l < k).  Taken literally these
sums assign nonzero values to number-changing moments such as <a1>, which the
total-photon selection rule forces to zero; the operator oracle in
:mod:`twomode.fock` therefore disagrees with them off the diagonal.  Both
evaluation routes are kept:

- ``Engine.ORACLE``: every moment via :func:`twomode.fock.moment_oracle`.
- ``Engine.LITERAL``: single-mode moments from the closed-form series;
  cross-mode number-conserving moments from the exact one-index closed form
  (identical to the oracle); cross-mode number-changing moments factorized
  into a product of the two single-mode series.

``compare_engines`` quantifies the disagreement per moment.
"""

import enum
import math
from dataclasses import dataclass

from .fock import FixedTotalState, MomentSpec, log_factorial, moment_oracle

__all__ = [
    "Engine",
    "MomentReport",
    "compare_engines",
    "cross_moment",
    "expectation",
    "literal_moment",
    "mode1_moment",
    "mode1_sum_empty",
    "mode2_moment",
    "mode2_sum_empty",
]


class Engine(enum.Enum):
    """Moment evaluation route."""

    LITERAL = "literal"
    ORACLE = "oracle"

    @classmethod
    def parse(cls, text: str) -> "Engine":
        key = text.strip().lower()
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown engine {text!r}; expected 'literal' or 'oracle'")


def _half_log_ratio(a: int, b: int, c: int) -> float:
    """0.5 * ln(a! b! / (c!)^2); caller guarantees non-negative arguments."""
    return 0.5 * (log_factorial(a) + log_factorial(b) - 2.0 * log_factorial(c))


def mode1_sum_empty(total: int, daggers: int, lowers: int) -> bool:
    """True when the mode-1 series has crossing bounds (empty sum)."""
    hi = total if lowers >= daggers else total - (daggers - lowers)
    return lowers > hi


def mode2_sum_empty(total: int, daggers: int, lowers: int) -> bool:
    """True when the mode-2 series has crossing bounds (empty sum)."""
    lo = 0 if lowers >= daggers else daggers - lowers
    return lo > total - lowers


def mode1_moment(state: FixedTotalState, daggers: int, lowers: int) -> complex:
    """Closed-form series for ``<a1^dag^daggers a1^lowers>``.

    Empty sums (e.g. lowers > M) return 0; terms whose factorial arguments
    would be negative are zero by convention.
    """
    if daggers < 0 or lowers < 0:
        raise ValueError("exponents must be non-negative")
    c = state.amplitudes
    m, k, l = state.total, daggers, lowers
    hi = m if l >= k else m - (k - l)
    total = 0.0 + 0.0j
    for n in range(l, hi + 1):
        partner = n - l + k
        if partner < 0 or partner > m:
            continue
        weight = math.exp(_half_log_ratio(n, partner, n - l))
        total += c[n].conjugate() * c[partner] * weight
    return total


def mode2_moment(state: FixedTotalState, daggers: int, lowers: int) -> complex:
    """Closed-form series for ``<a2^dag^daggers a2^lowers>`` (mirror of mode 1)."""
    if daggers < 0 or lowers < 0:
        raise ValueError("exponents must be non-negative")
    c = state.amplitudes
    m, k, l = state.total, daggers, lowers
    lo = 0 if l >= k else k - l
    total = 0.0 + 0.0j
    for n in range(lo, m - l + 1):
        partner = n + l - k
        if partner < 0 or partner > m:
            continue
        weight = math.exp(_half_log_ratio(m - n, m - n - l + k, m - n - l))
        total += c[n].conjugate() * c[partner] * weight
    return total


def cross_moment(state: FixedTotalState, spec: MomentSpec) -> complex:
    """Exact closed form for a number-conserving moment on a fixed-total state.

    With d = k - j = r - s the operator maps basis index n to n - d, so the
    expectation collapses to a single sum

        sum_n conj(c_(n-d)) c_n * w1(n-d, j) w1(n, k) w2(M-n+d, r) w2(M-n, s)

    where w1/w2 are square roots of falling factorials.  Number-changing
    specs return exactly 0 (orthogonal total-photon sectors).
    """
    if not spec.conserving:
        return 0.0 + 0.0j
    c = state.amplitudes
    m = state.total
    j, k, r, s = spec.j, spec.k, spec.r, spec.s
    d = k - j
    total = 0.0 + 0.0j
    for n in range(m + 1):
        left = n - d
        if left < 0 or left > m:
            continue
        if n - k < 0 or left - j < 0:
            continue
        if m - n - s < 0 or m - left - r < 0:
            continue
        log_w = 0.5 * (
            log_factorial(n) - log_factorial(n - k)
            + log_factorial(left) - log_factorial(left - j)
            + log_factorial(m - n) - log_factorial(m - n - s)
            + log_factorial(m - left) - log_factorial(m - left - r)
        )
        total += c[left].conjugate() * c[n] * math.exp(log_w)
    return total


def literal_moment(state: FixedTotalState, spec: MomentSpec) -> complex:
    """Literal-engine value of an arbitrary moment on a fixed-total state.

    Pure single-mode specs use the closed-form series of their mode; mixed
    number-conserving specs use the exact joint closed form; mixed
    number-changing specs factorize into the product of the two single-mode
    series (the only nonzero value the series machinery can assign them).
    """
    if not isinstance(state, FixedTotalState):
        raise TypeError("the literal engine requires a fixed-total state")
    pure1 = spec.r == 0 and spec.s == 0
    pure2 = spec.j == 0 and spec.k == 0
    if pure1:
        return mode1_moment(state, spec.j, spec.k)
    if pure2:
        return mode2_moment(state, spec.r, spec.s)
    if spec.conserving:
        return cross_moment(state, spec)
    return mode1_moment(state, spec.j, spec.k) * mode2_moment(state, spec.r, spec.s)


def expectation(state, spec: MomentSpec, engine: Engine) -> complex:
    """Evaluate a moment under the chosen engine.

    The oracle accepts any state; the literal engine is only defined for
    fixed-total states.
    """
    if engine is Engine.ORACLE:
        return moment_oracle(state, spec)
    return literal_moment(state, spec)


@dataclass(frozen=True)
class MomentReport:
    """Side-by-side literal/oracle values for one moment."""

    spec: MomentSpec
    literal_value: complex
    oracle_value: complex
    abs_discrepancy: float
    degenerate: bool


def compare_engines(state: FixedTotalState, specs) -> list[MomentReport]:
    """Compare both engines on a list of single-mode moment specs.

    Only pure single-mode specs (j,k,0,0) or (0,0,r,s) are accepted, since
    those are the ones the literal series define directly.  The degenerate
    flag marks specs whose series bounds cross (empty sum returned as 0).
    """
    reports = []
    for spec in specs:
        pure1 = spec.r == 0 and spec.s == 0
        pure2 = spec.j == 0 and spec.k == 0
        if not (pure1 or pure2):
            raise ValueError(f"compare_engines expects single-mode specs, got {spec}")
        lit = literal_moment(state, spec)
        ora = moment_oracle(state, spec)
        if pure1:
            degenerate = mode1_sum_empty(state.total, spec.j, spec.k)
        else:
            degenerate = mode2_sum_empty(state.total, spec.r, spec.s)
        reports.append(
            MomentReport(
                spec=spec,
                literal_value=lit,
                oracle_value=ora,
                abs_discrepancy=abs(lit - ora),
                degenerate=degenerate,
            )
        )
    return reports
