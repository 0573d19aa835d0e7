"""Laguerre polynomials L_n^(alpha)(nx): expansion in half-integer-order terms.

The leading approximants are L_n^(1/2) and L_{n-1}^(1/2) (Hermite
polynomials in disguise), combined as

    L_n^(alpha)(nx) = sum_k [A_k Phi_k(x,n) + B_k Psi_k(x,n)],

with coefficient pairs coming from a two-point Taylor expansion of
f(w) = (1-w)^(1/2-alpha) at the conjugate saddles w+- = 1 - x/2 +- i
sqrt(x(4-x))/2.  The series converges for x > 1 (|x| > 1 in the complex
extension) and the terms decay like n^(-floor((k+1)/2)) relative to the
leading pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mp, mpc, mpf

from .numerics import (
    SignedLogValue,
    _ScaledPair,
    binom_general,
    is_complex,
    laguerre_direct,
    resolve_prec,
    slv_sum,
    to_mp,
)
from .results import ContourSpec, ExpansionResult
from .two_point_taylor import power_provider, to_AB, two_point_coeffs

OUTSIDE_CONVERGENCE_FLAG = "outside proven convergence (|x| <= 1)"


@dataclass(frozen=True)
class LaguerreParams:
    alpha: complex
    x: complex
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be a positive integer")


@dataclass(frozen=True)
class LaguerreSaddles:
    w_plus: complex
    w_minus: complex
    xi: complex


@dataclass(frozen=True)
class PhiPsiSequences:
    phi: tuple  # SignedLogValue per order
    psi: tuple


@dataclass(frozen=True)
class LaguerreABCoeffs:
    A: tuple
    B: tuple
    beta: complex  # 1/2 - alpha


def saddles(x, prec=None) -> LaguerreSaddles:
    """Saddle pair w+- = 1 - x/2 +- (i/2) xi with w+ w- = 1.

    xi = sqrt(x(4-x)) with the positive root for 0 < x < 4 and
    xi = i sqrt(x(x-4)) (positive root) for x >= 4; complex x uses the
    principal branch of sqrt(x(4-x)).
    """
    with resolve_prec(prec).applied():
        x = to_mp(x)
        if x == 0:
            raise ValueError("x must be nonzero")
        if is_complex(x):
            xi = mpmath.sqrt(x * (4 - x))
        elif x < 4:
            xi = mpmath.sqrt(x * (4 - x))
        else:
            xi = mpc(0, 1) * mpmath.sqrt(x * (x - 4))
        half_i_xi = mpc(0, 1) * xi / 2
        return LaguerreSaddles(w_plus=1 - x / 2 + half_i_xi, w_minus=1 - x / 2 - half_i_xi, xi=xi)


def _leading_pair_raw(x, n: int):
    """Raw (Phi_0, Psi_0) = (L_n^(1/2)(nx), L_{n-1}^(1/2)(nx)).

    Real positive x goes through the scaled Hermite recurrence
    H_{2n+1}(sqrt(nx)); other arguments fall back to the direct sum.
    """
    x = to_mp(x)
    if not is_complex(x) and x > 0:
        y = mpmath.sqrt(n * x)
        return (_hermite_laguerre_half(n, y), _hermite_laguerre_half(n - 1, y))
    return (
        laguerre_direct(mpf(1) / 2, n, n * x, prec=mp.prec).value(),
        laguerre_direct(mpf(1) / 2, n - 1, n * x, prec=mp.prec).value(),
    )


def _hermite_laguerre_half(n: int, y):
    """L_n^(1/2)(y^2) = (-1)^n H_{2n+1}(y) / (n! 2^(2n+1) y), log-scaled."""
    m = 2 * n + 1
    pair = _ScaledPair(y * 0 + 1, 2 * y)
    for k in range(1, m):
        pair.step(2 * y * pair.cur - 2 * k * pair.prev)
    slv = pair.current_slv()
    if slv.is_zero:
        return mpf(0)
    log_den = mpmath.loggamma(n + 1) + m * mpmath.log(mpf(2)) + mpmath.log(y)
    return mpf(-1) ** n * slv.sign * mpmath.exp(slv.log_mag - log_den)


def _phi_psi_raw(x, n: int, K: int):
    """Raw Phi_0..Phi_K, Psi_0..Psi_K at ambient precision via recurrences."""
    x = to_mp(x)
    f0, p0 = _leading_pair_raw(x, n)
    Phi = [f0]
    Psi = [p0]
    half = mpf(1) / 2
    for k in range(1, K + 1):
        a1 = (k - 1) * (x**2 - 2 * x - 2) - half
        a2 = (k - 1) * x * (2 - x)
        b1 = (k - 1) * (2 - 3 * x) + (1 - x) / 2
        b2 = (k - 1) * x * (4 * x - x**2 - 2)
        phi_m2 = Phi[k - 2] if k >= 2 else 0
        psi_m2 = Psi[k - 2] if k >= 2 else 0
        phik = (a1 * Phi[k - 1] + a2 * phi_m2 + b1 * Psi[k - 1] + b2 * psi_m2) / (
            n - 2 * k + mpf(3) / 2
        )
        c0 = (2 - 3 * k) * x + 2 * (k - 1) + (1 - x) / 2
        c1 = (1 - k) * x**3 + 4 * (k - 1) * x**2 + k * x + 2 * (1 - k) + (x - 1) / 2
        c2 = -b2
        d1 = (4 * k - 3) * x**2 + 2 * (4 - 5 * k) * x + 2 * (k - 1) + (x**2 - 3 * x + 1) / 2
        d2 = (k - 1) * x * (x**3 - 6 * x**2 + 9 * x - 2)
        psik = (c0 * phik + c1 * Phi[k - 1] + c2 * phi_m2 + d1 * Psi[k - 1] + d2 * psi_m2) / (
            n - 2 * k + half
        )
        Phi.append(phik)
        Psi.append(psik)
    return Phi, Psi


def phi_psi_sequences(params: LaguerreParams, K: int, enforce_depth: bool = True, prec=None) -> PhiPsiSequences:
    """Phi/Psi streams through order K by the coupled recurrences.

    With ``enforce_depth`` the order is capped at the polynomial degree,
    where the finite-sum representation of the terms stays meaningful;
    deeper streams (used e.g. to witness divergence outside the
    convergence region) must opt out.
    """
    if enforce_depth and K > params.n:
        raise ValueError("recurrence depth exceeds degree (K > n)")
    with resolve_prec(prec).applied():
        Phi, Psi = _phi_psi_raw(params.x, params.n, K)
        return PhiPsiSequences(
            phi=tuple(SignedLogValue.from_value(v) for v in Phi),
            psi=tuple(SignedLogValue.from_value(v) for v in Psi),
        )


def phi_psi_direct(params: LaguerreParams, k: int, prec=None):
    """(Phi_k, Psi_k) as binomial-weighted sums of shifted Laguerre terms.

    Phi_k = sum_j C(k,j) x^(k-j) L^(1/2-2j)_{n-k+j}(nx) and Psi_k the
    same with degrees lowered by one; valid for k <= n.
    """
    if not 0 <= k <= params.n:
        raise ValueError("direct sums need 0 <= k <= n")
    pc = resolve_prec(prec)
    with pc.applied():
        x = to_mp(params.x)
        n = params.n
        phi_terms = []
        psi_terms = []
        for j in range(k + 1):
            w = binom_general(k, j, prec=mp.prec) * x ** (k - j)
            order = mpf(1) / 2 - 2 * j
            phi_terms.append(SignedLogValue.from_value(w) * laguerre_direct(order, n - k + j, n * x, prec=mp.prec))
            psi_terms.append(SignedLogValue.from_value(w) * laguerre_direct(order, n - k + j - 1, n * x, prec=mp.prec))
        return slv_sum(phi_terms), slv_sum(psi_terms)


def _interp_ab0(alpha, x):
    """A_0, B_0 from interpolating f(w) = (1-w)^(1/2-alpha) at the saddles."""
    beta = mpf(1) / 2 - to_mp(alpha)
    sd = saddles(x)
    fp = (1 - sd.w_plus) ** beta
    fm = (1 - sd.w_minus) ** beta
    B0 = (fp - fm) / (sd.w_plus - sd.w_minus)
    A0 = fp - B0 * sd.w_plus
    return A0, B0


def _confluent_ab(alpha, K: int):
    """Exact A_k, B_k at the saddle coalescence x = 4.

    There the expansion base degenerates to (w+1)^(2k); matching the
    ordinary Taylor series of f at w = -1 gives, with beta = 1/2 - alpha,
    B_k = 2^beta C(beta, 2k+1) (-1/2)^(2k+1) and A_k = B_k + 2^beta
    C(beta, 2k) 4^(-k).
    """
    beta = mpf(1) / 2 - to_mp(alpha)
    two_b = mpf(2) ** beta
    A = []
    B = []
    for k in range(K + 1):
        c_even = binom_general(beta, 2 * k, prec=mp.prec) * mpf(4) ** (-k)
        c_odd = binom_general(beta, 2 * k + 1, prec=mp.prec) * (mpf(-1) / 2) ** (2 * k + 1)
        B.append(two_b * c_odd)
        A.append(two_b * (c_even + c_odd))
    return A, B


def ab_coeffs(alpha, x, K: int, prec=None) -> LaguerreABCoeffs:
    """Coefficient streams A_k, B_k through order K.

    Seeds by saddle interpolation; k >= 1 by the two-row recursion solved
    in elimination form.  The recursion's 2x2 system has determinant
    proportional to x^2 (4-x), so exactly at x = 4 the coalescence
    formulas are used instead (the explicit coefficient sum also fails
    there: it divides by powers of the saddle separation).
    """
    with resolve_prec(prec).applied():
        alpha = to_mp(alpha)
        x = to_mp(x)
        if x == 0:
            raise ValueError("x must be nonzero")
        real_output = not (is_complex(alpha) or is_complex(x))
        if x == 4:
            A, B = _confluent_ab(alpha, K)
            return LaguerreABCoeffs(A=tuple(A), B=tuple(B), beta=mpf(1) / 2 - alpha)
        A0, B0 = _interp_ab0(alpha, x)
        if real_output:
            A0, B0 = mp.re(A0), mp.re(B0)
        A = [A0]
        B = [B0]
        half = mpf(1) / 2
        for k in range(K):
            r1 = (alpha - half + 2 * k) * A[k] - (1 + k * x) * B[k]
            r2 = (alpha + half + 2 * k) * B[k]
            bk1 = (r2 - r1) / ((k + 1) * x * (4 - x))
            ak1 = r1 / ((k + 1) * x) + bk1
            A.append(ak1)
            B.append(bk1)
        return LaguerreABCoeffs(A=tuple(A), B=tuple(B), beta=half - alpha)


def ab0_closed_form(alpha, x, prec=None):
    """A_0, B_0 in closed trig (1 < x < 4) / hyperbolic (x > 4) form.

    Writing x = 4 sin^2(theta/2) puts the saddles at e^(+-i theta) and the
    interpolation reduces to (beta = 1/2 - alpha)

        A_0 = 2^beta sin^beta(theta/2) sin(theta - beta(theta-pi)/2) / sin(theta)
        B_0 = 2^beta sin^beta(theta/2) sin(beta(theta-pi)/2) / sin(theta);

    for x = 4 cosh^2(theta/2) (saddles -e^(+-theta)) the analogues are

        A_0 = 2^beta cosh^beta(theta/2) sinh(theta(1 - beta/2)) / sinh(theta)
        B_0 = -2^beta cosh^beta(theta/2) sinh(beta theta/2) / sinh(theta).

    Both limits at x -> 4 equal 2^beta (1 - beta/2) and -beta 2^(beta-1).
    """
    with resolve_prec(prec).applied():
        alpha = to_mp(alpha)
        x = to_mp(x)
        beta = mpf(1) / 2 - alpha
        if is_complex(x) or not 0 < x:
            raise ValueError("closed forms require real x > 0")
        if x == 4:
            return mpf(2) ** beta * (1 - beta / 2), -beta * mpf(2) ** (beta - 1)
        if x < 4:
            th = 2 * mpmath.asin(mpmath.sqrt(x) / 2)
            pre = mpf(2) ** beta * mpmath.sin(th / 2) ** beta / mpmath.sin(th)
            return (
                pre * mpmath.sin(th - beta * (th - mpmath.pi) / 2),
                pre * mpmath.sin(beta * (th - mpmath.pi) / 2),
            )
        th = 2 * mpmath.acosh(mpmath.sqrt(x) / 2)
        pre = mpf(2) ** beta * mpmath.cosh(th / 2) ** beta / mpmath.sinh(th)
        return pre * mpmath.sinh(th * (1 - beta / 2)), -pre * mpmath.sinh(beta * th / 2)


def a_k_series(alpha, x, k: int, primed: bool = False, prec=None):
    """The explicit coefficient sum for a_k (k >= 1); needs xi != 0.

    a_k = sum_{j=0}^{k} (k+j-1)! (alpha-1/2)_{k-j} /
          [k! j! (k-j)! (i xi)^(k+j+1)] *
          { (-1)^j j (1-w+)^{-(alpha+k-j-1/2)} - (-1)^k k (1-w-)^{-(alpha+k-j-1/2)} }

    ``primed`` swaps the roles of the two saddles (i xi -> -i xi and
    w+ <-> w-), giving the partner stream a_k'; over 1 < x < 4 that is
    just the conjugate of a_k, but for x > 4 the two are independent
    reals.
    """
    if k < 1:
        raise ValueError("series form defined for k >= 1")
    with resolve_prec(prec).applied():
        alpha = to_mp(alpha)
        sd = saddles(x)
        if sd.xi == 0:
            raise ValueError("coefficient sum divides by the saddle separation (xi = 0)")
        i_xi = mpc(0, 1) * sd.xi
        wp, wm = sd.w_plus, sd.w_minus
        if primed:
            i_xi = -i_xi
            wp, wm = wm, wp
        half = mpf(1) / 2
        total = mpc(0)
        for j in range(k + 1):
            c = (
                mpmath.factorial(k + j - 1)
                * mpmath.rf(alpha - half, k - j)
                / (mpmath.factorial(k) * mpmath.factorial(j) * mpmath.factorial(k - j) * i_xi ** (k + j + 1))
            )
            expo = alpha + k - j - half
            total += c * (
                (-1) ** j * j * (1 - wp) ** (-expo)
                - (-1) ** k * k * (1 - wm) ** (-expo)
            )
        return total


def ab_coeffs_direct(alpha, x, K: int, prec=None) -> LaguerreABCoeffs:
    """A_k, B_k via the generic two-point machinery (cross-check path)."""
    with resolve_prec(prec).applied():
        alpha = to_mp(alpha)
        sd = saddles(x)
        if sd.xi == 0:
            raise ValueError("two-point route needs distinct saddles")
        f = power_provider(mpf(1) / 2 - alpha, 1, -1)
        tp = two_point_coeffs(f, sd.w_plus, sd.w_minus, K, prec=mp.prec)
        ab = to_AB(tp)
        real_output = not (is_complex(alpha) or is_complex(to_mp(x)))
        A = tuple(mp.re(v) if real_output else v for v in ab.A)
        B = tuple(mp.re(v) if real_output else v for v in ab.B)
        return LaguerreABCoeffs(A=A, B=B, beta=mpf(1) / 2 - alpha)


def laguerre_expand(params: LaguerreParams, N: int, stream: str = "auto", prec=None) -> ExpansionResult:
    """Partial sums S_0..S_N of sum_k [A_k Phi_k + B_k Psi_k].

    ``stream`` picks how the term pairs are produced: "recurrence" (fast,
    accurate for orders up to about the degree), "quadrature" (stable at
    any depth), or "auto".
    """
    with resolve_prec(prec).applied():
        x = to_mp(params.x)
        ab = ab_coeffs(params.alpha, x, N, prec=mp.prec)
        if stream == "auto":
            stream = "recurrence" if N <= max(8, params.n // 2) else "quadrature"
        if stream == "recurrence":
            Phi, Psi = _phi_psi_raw(x, params.n, N)
        elif stream == "quadrature":
            Phi, Psi = contour_phi_psi_stream(params, N, prec=mp.prec)
        else:
            raise ValueError(f"unknown stream {stream!r}")
        running = x * 0
        partials = []
        last_mag = mpf(0)
        for k in range(N + 1):
            term = ab.A[k] * Phi[k] + ab.B[k] * Psi[k]
            running += term
            partials.append(SignedLogValue.from_value(running))
            last_mag = abs(term)
        flags = () if abs(x) > 1 else (OUTSIDE_CONVERGENCE_FLAG,)
        return ExpansionResult(
            value=partials[-1],
            partial_sums=tuple(partials),
            terms_used=N + 1,
            truncation_order=N,
            error_estimate=last_mag,
            flags=flags,
        )


def contour_phi_psi_stream(params: LaguerreParams, K: int, contour: ContourSpec = ContourSpec(), prec=None):
    """Raw (Phi_0..Phi_K, Psi_0..Psi_K) by one quadrature sweep.

    Unlike the coupled recurrences, each order comes out independently,
    so there is no error accumulation at large K; used for deep partial
    sums where the recurrences' wanted solution becomes subdominant.
    """
    if not contour.radius < 1:
        raise ValueError("contour radius must be < 1")
    with resolve_prec(prec).applied():
        x = to_mp(params.x)
        n = params.n
        sd = saddles(x)
        r = to_mp(contour.radius)
        M = contour.nodes
        acc_phi = [mpc(0)] * (K + 1)
        acc_psi = [mpc(0)] * (K + 1)
        for j in range(M):
            w = r * mpmath.exp(mpc(0, 2 * mpmath.pi * j / M))
            common = mpmath.exp(n * x * w / (w - 1)) * (1 - w) ** (mpf(-3) / 2) * w ** (-n)
            base = (w - sd.w_plus) * (w - sd.w_minus)
            f = common
            g = common * w
            for k in range(K + 1):
                acc_phi[k] += f
                acc_psi[k] += g
                f *= base
                g *= base
        real_out = not (is_complex(x) or is_complex(to_mp(params.alpha)))
        out = lambda v: mp.re(v / M) if real_out else v / M
        return [out(v) for v in acc_phi], [out(v) for v in acc_psi]


def contour_phi_psi_oracle(params: LaguerreParams, k: int, contour: ContourSpec = ContourSpec(), prec=None):
    """(Phi_k, Psi_k) by trapezoidal quadrature of their Cauchy integrals.

    Phi_k integrates (w-w+)^k (w-w-)^k e^{n x w/(w-1)} (1-w)^(-3/2) dw/w
    over |w| = r < 1 (principal branch of (1-w)^mu, equal to 1 at w = 0);
    Psi_k drops the 1/w.
    """
    if not contour.radius < 1:
        raise ValueError("contour radius must be < 1")
    with resolve_prec(prec).applied():
        x = to_mp(params.x)
        n = params.n
        sd = saddles(x)
        r = to_mp(contour.radius)
        M = contour.nodes
        acc_phi = mpc(0)
        acc_psi = mpc(0)
        for j in range(M):
            w = r * mpmath.exp(mpc(0, 2 * mpmath.pi * j / M))
            common = (
                ((w - sd.w_plus) * (w - sd.w_minus)) ** k
                * mpmath.exp(n * x * w / (w - 1))
                * (1 - w) ** (mpf(-3) / 2)
                * w ** (-n)
            )
            acc_phi += common
            acc_psi += common * w
        phi = acc_phi / M
        psi = acc_psi / M
        if not (is_complex(x) or is_complex(to_mp(params.alpha))):
            phi, psi = mp.re(phi), mp.re(psi)
        return SignedLogValue.from_value(phi), SignedLogValue.from_value(psi)
