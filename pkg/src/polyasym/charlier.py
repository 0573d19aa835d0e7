"""Charlier polynomials C_n^a(nx): expansion in Gamma-ratio terms.

The scaled polynomial has the convergent expansion

    C_n^a(nx) = e^{a/(1-x)} * sum_k (-a)^k / k! * Phi_k(x, n),

where Phi_0(x,n) = (nx)(nx-1)...(nx-n+1) and the higher terms follow a
two-step recurrence in k.  The terms form an asymptotic sequence for
large n, so early truncation already tracks the polynomial; the series
itself converges for every x != 1 (the saddle point 1/(x-1) escapes to
infinity at x = 1, which is excluded by a configurable guard band).
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mp, mpc, mpf

from .numerics import (
    SignedLogValue,
    charlier_direct,
    falling_factorial,
    is_complex,
    resolve_prec,
    to_mp,
)
from .results import ContourSpec, ExpansionResult

DEFAULT_X_GUARD = 1e-3
ADAPTIVE_MAX_ORDER = 200
ADAPTIVE_REL_TOL = 1e-16


@dataclass(frozen=True)
class CharlierParams:
    """Parameters of C_n^a(nx); ``delta`` is the exclusion band around x = 1."""

    a: complex
    x: complex
    n: int
    delta: float = DEFAULT_X_GUARD

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be a positive integer")

    def check_expansion_domain(self):
        if abs(to_mp(self.x) - 1) < self.delta:
            raise ValueError(
                f"saddle at infinity: |x - 1| < {self.delta} (x = {self.x})"
            )


@dataclass(frozen=True)
class SaddleInfo:
    """The single saddle point w0 = 1/(x - 1) of x*log(1+w) - log(w)."""

    w0: complex


@dataclass(frozen=True)
class PhiSequence:
    terms: tuple  # SignedLogValue per order


def saddle(x, prec=None) -> SaddleInfo:
    with resolve_prec(prec).applied():
        x = to_mp(x)
        if x == 1:
            raise ValueError("saddle at infinity: x = 1")
        return SaddleInfo(w0=1 / (x - 1))


def _phi_raw_sequence(x, n: int, K: int):
    """Raw mp values of Phi_0..Phi_K at ambient precision.

    Phi_0 is the falling product, Phi_1 its one-factor-shorter variant
    divided by (1 - x) (an exactly equivalent form of the standard ratio
    that stays finite when n(x-1)+1 = 0), and k >= 2 follow the
    recurrence; any k whose recurrence denominator n(x-1)+k vanishes is
    replaced by the pole-free terminating-sum form.
    """
    x = to_mp(x)
    out = [falling_factorial(n * x, n)]
    if K >= 1:
        out.append(falling_factorial(n * x, n - 1) / (1 - x))
    for k in range(2, K + 1):
        den = n * (x - 1) + k
        if den == 0:
            out.append(_phi_terminating_sum(x, n, k))
            continue
        val = (
            (x * (1 - k) - k) / (x - 1) * out[k - 1]
            + x * (1 - k) / (x - 1) ** 2 * out[k - 2]
        ) / den
        out.append(val)
    return out


def _phi_terminating_sum(x, n: int, k: int):
    """Phi_k as its terminating hypergeometric-type sum, written pole-free.

    (1-x)^{-k} * sum_{j=0}^{k} [(-k)_j (-n)_j / j!] (1-x)^j * (nx)(nx-1)...(nx-n+j+1)

    Each summand carries a falling product of length n - j, so the value
    is entire in x; the Gamma-prefactor form of the same quantity has
    removable 0*inf degeneracies at nx - n + 1 in {0, -1, ...}.
    """
    x = to_mp(x)
    s = x * 0
    poch_k = 1  # (-k)_j
    poch_n = 1  # (-n)_j
    factj = 1
    for j in range(min(k, n) + 1):
        if j > 0:
            poch_k *= -k + (j - 1)
            poch_n *= -n + (j - 1)
            factj *= j
        s += mpf(poch_k * poch_n) / factj * (1 - x) ** j * falling_factorial(n * x, n - j)
    return s / (1 - x) ** k


def phi_k_hypergeometric(params: CharlierParams, k: int, prec=None) -> SignedLogValue:
    """Single Phi_k via the terminating-sum form (k+1 summands)."""
    if k < 0:
        raise ValueError("k must be a nonnegative integer")
    with resolve_prec(prec).applied():
        return SignedLogValue.from_value(_phi_terminating_sum(params.x, params.n, k))


def phi_sequence(params: CharlierParams, K: int, prec=None) -> PhiSequence:
    """Phi_0..Phi_K, recurrence-driven with per-term degenerate fallback."""
    params.check_expansion_domain()
    with resolve_prec(prec).applied():
        raw = _phi_raw_sequence(params.x, params.n, K)
        return PhiSequence(terms=tuple(SignedLogValue.from_value(v) for v in raw))


def charlier_expand(params: CharlierParams, N: int | None = None, prec=None) -> ExpansionResult:
    """Partial sums of the expansion; value and sums are SignedLogValue."""
    params.check_expansion_domain()
    with resolve_prec(prec).applied():
        a = to_mp(params.a)
        x = to_mp(params.x)
        order = ADAPTIVE_MAX_ORDER if N is None else N
        raw = _phi_raw_sequence(x, params.n, order)
        pref = mpmath.exp(a / (1 - x))
        running = x * 0
        partials = []
        coeff = 1  # (-a)^k / k!
        last_term_mag = mpf(0)
        used = 0
        for k in range(order + 1):
            if k > 0:
                coeff = coeff * (-a) / k
            term = coeff * raw[k]
            running += term
            partials.append(SignedLogValue.from_value(pref * running))
            last_term_mag = abs(pref * term)
            used = k
            if N is None and k > 0 and last_term_mag < ADAPTIVE_REL_TOL * abs(pref * running):
                break
        return ExpansionResult(
            value=partials[-1],
            partial_sums=tuple(partials),
            terms_used=used + 1,
            truncation_order=used,
            error_estimate=last_term_mag,
        )


def contour_phi_oracle(params: CharlierParams, k: int, contour: ContourSpec = ContourSpec(), prec=None) -> SignedLogValue:
    """Phi_k by trapezoidal quadrature of its Cauchy integral.

    n!/(2 pi i) * integral over |w| = r of (w - w0)^k (1+w)^{xn} dw / w^{n+1},
    with r < 1 so the circle stays clear of the branch point at w = -1.
    """
    if not contour.radius < 1:
        raise ValueError("contour radius must be < 1")
    with resolve_prec(prec).applied():
        x = to_mp(params.x)
        n = params.n
        w0 = saddle(x).w0
        r = to_mp(contour.radius)
        M = contour.nodes
        acc = mpc(0)
        for j in range(M):
            w = r * mpmath.exp(mpc(0, 2 * mpmath.pi * j / M))
            acc += (w - w0) ** k * mpmath.exp(x * n * mpmath.log(1 + w)) * w ** (-n)
        val = mpmath.factorial(n) * acc / M
        if not is_complex(x):
            val = mp.re(val)
        return SignedLogValue.from_value(val)


def term_ratio_probe(params: CharlierParams, k_range, prec=None):
    """Ratios t_k / t_{k-1} of successive series terms over k_range.

    For k much larger than n the magnitude trends toward a/((1-x) k).
    """
    ks = list(k_range)
    if not ks:
        return []
    kmax = max(ks)
    with resolve_prec(prec).applied():
        a = to_mp(params.a)
        if a == 0:
            return [to_mp(0) for _ in ks]
        raw = _phi_raw_sequence(to_mp(params.x), params.n, kmax)
        out = []
        for k in ks:
            if k < 1:
                raise ValueError("ratio needs k >= 1")
            if raw[k - 1] == 0:
                out.append(mpf("inf"))
            else:
                out.append((-a) / k * raw[k] / raw[k - 1])
        return out


def charlier_zeros(a, n: int, tol: float = 1e-10, prec=None):
    """All n real zeros of x -> C_n^a(nx) for real a > 0.

    Sign-change bracketing on the direct-sum oracle over an adaptively
    refined grid, then bisection to ``tol``.
    """
    a = float(a)
    if a <= 0:
        raise ValueError("zero bracketing requires real a > 0")
    if n < 1:
        raise ValueError("n must be a positive integer")
    pc = resolve_prec(prec)

    def sign_at(x):
        return charlier_direct(a, n, n * x, prec=pc).sign

    with pc.applied():
        lo = mpf(-0.02)
        # crude bound on the largest zero of C_n^a in its own variable,
        # rescaled by n, plus margin
        hi = (a + n - 1 + 2 * mpmath.sqrt(mpf(a) * n)) / n + mpf("0.5")
        points = max(2000, 40 * n)
        for _ in range(4):
            brackets = _sign_change_brackets(sign_at, lo, hi, points)
            if len(brackets) >= n:
                break
            points *= 4
        if len(brackets) != n:
            grid_info = f"grid [{float(lo)}, {float(hi)}] with {points} points"
            raise RuntimeError(
                f"bracketing failure: found {len(brackets)} sign changes, expected {n} ({grid_info})"
            )
        return [_bisect(sign_at, x1, x2, tol) for (x1, x2) in brackets]


def _sign_change_brackets(sign_at, lo, hi, points):
    xs = [lo + (hi - lo) * i / points for i in range(points + 1)]
    signs = [sign_at(x) for x in xs]
    out = []
    for i in range(points):
        s1, s2 = signs[i], signs[i + 1]
        if s1 == 0:
            out.append((xs[i], xs[i]))
        elif s1 * s2 < 0:
            out.append((xs[i], xs[i + 1]))
    if signs[-1] == 0:
        out.append((xs[-1], xs[-1]))
    return out


def _bisect(sign_at, x1, x2, tol):
    if x1 == x2:
        return x1
    s1 = sign_at(x1)
    while x2 - x1 > tol:
        xm = (x1 + x2) / 2
        sm = sign_at(xm)
        if sm == 0:
            return xm
        if s1 * sm < 0:
            x2 = xm
        else:
            x1 = xm
            s1 = sm
    return (x1 + x2) / 2
