"""Jacobi polynomials P_n^(alpha,beta)(x) on (-1,1): two convergent expansions.

Both expansions share the structure

    P_n^(alpha,beta)(x) = sum_k [A_k Phi_k(x,n) + B_k Psi_k(x,n)]

with coefficients from a two-point Taylor expansion at the conjugate
saddles +-i sqrt(1-x^2) of the generating-integral phase, and both
converge for every x in (-1,1).

* The ``chebyshev`` basis expands f(w) with half-unit exponent shifts so
  the leading terms are Chebyshev polynomials: Phi_0 = P_n^(-1/2,-1/2),
  Psi_0 = -(1/2)(1-x^2) P_{n-1}^(1/2,1/2).  Higher terms satisfy coupled
  recurrences and decay like n^(-floor((k+1)/2)) relative to the leading
  pair.

* The ``legendre`` basis expands the unshifted integrand factor, making
  the leading term proportional to the Legendre polynomial P_n(x).  This
  is the variant whose partial sums match the reference convergence
  tables for this family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
from mpmath import mp, mpc, mpf

from .numerics import is_complex, jacobi_direct, resolve_prec, to_mp
from .results import ContourSpec, ExpansionResult
from .two_point_taylor import (
    power_provider,
    product_provider,
    scaled_provider,
    to_AB,
    two_point_coeffs,
)

DEFAULT_EDGE_GUARD = 1e-6
CHEBYSHEV_BASIS = "chebyshev"
LEGENDRE_BASIS = "legendre"


@dataclass(frozen=True)
class JacobiParams:
    alpha: float
    beta: float
    x: float
    n: int
    delta: float = DEFAULT_EDGE_GUARD

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be a positive integer")

    def check_expansion_domain(self):
        if not abs(float(self.x)) < 1 - self.delta:
            raise ValueError(f"|x| must be < 1 - {self.delta} (x = {self.x})")


@dataclass(frozen=True)
class JacobiSaddles:
    w0: complex  # i sqrt(1 - x^2); the saddle pair is +-w0

    @property
    def w_plus(self):
        return self.w0

    @property
    def w_minus(self):
        return -self.w0


@dataclass(frozen=True)
class JacobiPhiPsi:
    basis: str
    phi: tuple  # real mp values
    psi: tuple


@dataclass(frozen=True)
class JacobiABCoeffs:
    basis: str
    A: tuple
    B: tuple
    a: tuple  # underlying complex two-point coefficients


def jacobi_saddles(x, prec=None) -> JacobiSaddles:
    with resolve_prec(prec).applied():
        x = to_mp(x)
        if not abs(x) < 1:
            raise ValueError("saddles require |x| < 1")
        return JacobiSaddles(w0=mpc(0, 1) * mpmath.sqrt(1 - x**2))


def phase(x, w):
    """log(1+w+x) + log(1-w-x) - log(w): the large-n phase of the integrand."""
    x = to_mp(x)
    w = to_mp(w)
    return mpmath.log(1 + w + x) + mpmath.log(1 - w - x) - mpmath.log(w)


# ---------------------------------------------------------------------------
# chebyshev basis
# ---------------------------------------------------------------------------


def _gegenbauer_halfint(m: int, shift: int, x):
    """P_m^(mu,mu)(x) for mu = shift - 1/2, via the generic recurrence."""
    return jacobi_direct(shift - mpf(1) / 2, shift - mpf(1) / 2, m, x, prec=mp.prec)


def chebyshev_phi0(x, n: int):
    """P_n^(-1/2,-1/2)(x) = 2^(-2n) (2n)!/(n!)^2 T_n(x), trig-form T_n."""
    x = to_mp(x)
    c = mpmath.exp(mpmath.loggamma(2 * n + 1) - 2 * mpmath.loggamma(n + 1) - 2 * n * mpmath.log(mpf(2)))
    return c * mpmath.cos(n * mpmath.acos(x))


def chebyshev_psi0(x, n: int):
    """-(1/2)(1-x^2) P_{n-1}^(1/2,1/2)(x), with the U_{n-1} closed form."""
    x = to_mp(x)
    m = n - 1
    if m < 0:
        return mpf(0)
    c = mpmath.exp(
        mpmath.loggamma(2 * m + 2) - mpmath.loggamma(m + 1) - mpmath.loggamma(m + 2) - 2 * m * mpmath.log(mpf(2))
    )
    th = mpmath.acos(x)
    u = mpmath.sin((m + 1) * th) / mpmath.sin(th)
    return -mpf(1) / 2 * (1 - x**2) * c * u


def _cheb_phi_direct(x, n: int, k: int):
    """Phi_k = sum_j C(k,j) (1-x^2)^(k+j) 4^(-j) P_{n-2j}^(2j-1/2,2j-1/2)(x)."""
    x = to_mp(x)
    s = mpf(0)
    for j in range(k + 1):
        if n - 2 * j < 0:
            continue
        s += (
            mpmath.binomial(k, j)
            * (1 - x**2) ** (k + j)
            / mpf(4) ** j
            * _gegenbauer_halfint(n - 2 * j, 2 * j, x)
        )
    return s


def _cheb_psi_direct(x, n: int, k: int):
    """Psi_k = -(1/2)(1-x^2) sum_j C(k,j) (1-x^2)^(k+j) 4^(-j) P_{n-1-2j}^(2j+1/2,...)."""
    x = to_mp(x)
    s = mpf(0)
    for j in range(k + 1):
        if n - 1 - 2 * j < 0:
            continue
        s += (
            mpmath.binomial(k, j)
            * (1 - x**2) ** (k + j)
            / mpf(4) ** j
            * _gegenbauer_halfint(n - 1 - 2 * j, 2 * j + 1, x)
        )
    return -mpf(1) / 2 * (1 - x**2) * s


def _cheb_raw(x, n: int, K: int):
    """Chebyshev-basis Phi/Psi streams: closed seeds, recurrences for k >= 2.

    The k = 1 seeds are the two-term direct sums (the fastest exact form;
    they cost one auxiliary recurrence each).
    """
    x = to_mp(x)
    Phi = [chebyshev_phi0(x, n)]
    Psi = [chebyshev_psi0(x, n)]
    if K >= 1:
        Phi.append((1 - x**2) * Phi[0] + (1 - x**2) ** 2 / 4 * _gegenbauer_halfint(n - 2, 2, x))
        psi1_inner = (1 - x**2) * _gegenbauer_halfint(n - 1, 1, x) + (
            (1 - x**2) ** 2 / 4
        ) * _gegenbauer_halfint(n - 3, 3, x)
        Psi.append(-mpf(1) / 2 * (1 - x**2) * psi1_inner)
    for k in range(2, K + 1):
        one = 1 - x**2
        a1 = one * (6 * k - 5)
        a2 = -4 * (k - 1) * one**2
        b1 = -x * (4 * k - 3)
        b2 = 4 * x * (k - 1) * one
        phik = (a1 * Phi[k - 1] + a2 * Phi[k - 2] + b1 * Psi[k - 1] + b2 * Psi[k - 2]) / (n + 2 * k - 1)
        c0 = -x * (4 * k - 1)
        c1 = x * one * (8 * k - 5)
        c2 = -4 * x * one**2 * (k - 1)
        d1 = 3 * (2 * k - 1) * one
        d2 = -4 * one**2 * (k - 1)
        psik = (c0 * phik + c1 * Phi[k - 1] + c2 * Phi[k - 2] + d1 * Psi[k - 1] + d2 * Psi[k - 2]) / (n + 2 * k)
        Phi.append(phik)
        Psi.append(psik)
    return Phi, Psi


# ---------------------------------------------------------------------------
# legendre basis
# ---------------------------------------------------------------------------


def _poly_coeff(m: int, x, n: int):
    """[w^m] (1 - (w+x)^2)^n as a finite sum with exact integer binomials."""
    if m < 0 or m > 2 * n:
        return mpf(0)
    x = to_mp(x)
    s = mpf(0)
    for i in range((m + 1) // 2, n + 1):
        c = math.comb(n, i) * math.comb(2 * i, m)
        if 2 * i == m:
            xpow = mpf(1)
        else:
            if x == 0:
                continue
            xpow = x ** (2 * i - m)
        s += mpf(-1) ** i * c * xpow
    return s


def _legendre_raw(x, n: int, K: int):
    """Unshifted-basis streams: PhiHat_k and PsiHat_k (PhiHat_0 ~ Legendre P_n)."""
    x = to_mp(x)
    sign = mpf(-1) ** n / mpf(2) ** n
    Phi = []
    Psi = []
    for k in range(K + 1):
        sp = mpf(0)
        sq = mpf(0)
        for j in range(k + 1):
            w = mpmath.binomial(k, j) * (1 - x**2) ** (k - j)
            sp += w * _poly_coeff(n - 2 * j, x, n)
            sq += w * _poly_coeff(n - 1 - 2 * j, x, n)
        Phi.append(sign * sp)
        Psi.append(sign * sq)
    return Phi, Psi


def _normalizer(alpha, beta, x):
    return (1 - x) ** alpha * (1 + x) ** beta


def _f_provider(alpha, beta, x, shift):
    """Provider for the expanded integrand factor.

    shift = 1/2 gives the chebyshev-basis f (exponents alpha+1/2,
    beta+1/2, normalized by (1-x)^(alpha+1/2) (1+x)^(beta+1/2)); shift = 0
    the legendre-basis g (exponents alpha, beta, matching normalization).
    """
    ea = to_mp(alpha) + shift
    eb = to_mp(beta) + shift
    x = to_mp(x)
    prod = product_provider(power_provider(ea, 1 - x, -1), power_provider(eb, 1 + x, 1))
    return scaled_provider(prod, 1 / ((1 - x) ** ea * (1 + x) ** eb))


def _a_series_stream(alpha, beta, x, K: int):
    """a_0..a_K of the unnormalized chebyshev-basis factor at ambient precision.

    a_0 = -(1-x+w0)^(alpha+1/2) (1+x-w0)^(beta+1/2) / (2 w0); each higher
    a_m is an explicit derivative double sum at the two saddles.  All
    fractional powers are hoisted out so the triple loop costs only
    rational complex arithmetic.
    """
    x = to_mp(x)
    alpha = to_mp(alpha)
    beta = to_mp(beta)
    w0 = jacobi_saddles(x).w0
    ea = alpha + mpf(1) / 2
    eb = beta + mpf(1) / 2
    b_pp = 1 - x - w0  # base at +w0 for the (1 - x - w)^ea factor
    b_pm = 1 + x + w0
    b_mp = 1 - x + w0  # same bases evaluated at -w0
    b_mm = 1 + x - w0
    p_pp = b_pp**ea
    p_pm = b_pm**eb
    p_mp = b_mp**ea
    p_mm = b_mm**eb
    out = [-(p_mp * p_mm) / (2 * w0)]
    if K == 0:
        return out
    # integer-power and Pochhammer tables up to order K
    pow_pp = [mpc(1)]
    pow_pm = [mpc(1)]
    pow_mp = [mpc(1)]
    pow_mm = [mpc(1)]
    rf_a = [mpf(1)]
    rf_b = [mpf(1)]
    for i in range(K):
        pow_pp.append(pow_pp[-1] * b_pp)
        pow_pm.append(pow_pm[-1] * b_pm)
        pow_mp.append(pow_mp[-1] * b_mp)
        pow_mm.append(pow_mm[-1] * b_mm)
        rf_a.append(rf_a[-1] * (-ea + i))
        rf_b.append(rf_b[-1] * (-eb + i))
    fact = [mpmath.factorial(i) for i in range(2 * K + 1)]
    two_w0 = 2 * w0
    pow_2w0 = [mpc(1)]
    for i in range(2 * K + 2):
        pow_2w0.append(pow_2w0[-1] * two_w0)
    for m in range(1, K + 1):
        total = mpc(0)
        for k in range(m + 1):
            pre = fact[m + k - 1] / (fact[k] * fact[m - k] * pow_2w0[m + k + 1])
            inner = mpc(0)
            for j in range(m - k + 1):
                coeff = fact[m - k] / (fact[j] * fact[m - k - j]) * rf_a[j] * rf_b[m - k - j]
                t1 = k * (-1) ** (m + j) * coeff * (p_pp * p_pm) / (pow_pp[j] * pow_pm[m - k - j])
                t2 = m * (-1) ** (k + j) * coeff * (p_mp * p_mm) / (pow_mp[j] * pow_mm[m - k - j])
                inner += t1 - t2
            total += pre * inner
        out.append(total / fact[m])
    return out


def a_m_series(alpha, beta, x, m: int, prec=None):
    """Single two-point coefficient a_m (see _a_series_stream)."""
    with resolve_prec(prec).applied():
        return _a_series_stream(alpha, beta, x, m)[m]


def _ab_ode_stream(alpha, beta, x, K: int, shift):
    """Normalized A_k, B_k via a first-order recursion, O(K) total.

    h(w) = (1-x-w)^(alpha+shift) (1+x+w)^(beta+shift) satisfies
    (1-x-w)(1+x+w) h' = [eb(1-x-w) - ea(1+x+w)] h; matching coefficients
    of P^m and w P^m (P = w^2 + 1 - x^2) turns that into a 2x2 step whose
    determinant is 16 (1-x^2)^2 (m+1)^2, nonsingular on the whole
    interval.  Forward iteration is stable because A_k, B_k are the
    fastest-growing solution (they scale like the inverse oval radius to
    the k-th power).
    """
    alpha = to_mp(alpha)
    beta = to_mp(beta)
    x = to_mp(x)
    ea = alpha + shift
    eb = beta + shift
    s = 1 - x**2
    w0 = jacobi_saddles(x).w0
    fp = (1 - x - w0) ** ea * (1 + x + w0) ** eb
    fm = (1 - x + w0) ** ea * (1 + x - w0) ** eb
    B0 = (fp - fm) / (2 * w0)
    A0 = fp - B0 * w0
    c0 = eb * (1 - x) - ea * (1 + x)
    c1 = -(ea + eb)
    den = (1 - x) ** ea * (1 + x) ** eb
    A = [A0]
    B = [B0]
    for m in range(K):
        b_prev = B[m - 1] if m >= 1 else mpc(0)
        r1 = (c0 + 4 * x * m) * A[m] + (c1 + 2 * m - 1) * b_prev - (c1 + 2 + 6 * m) * s * B[m]
        r2 = (c1 + 2 * m) * A[m] + (c0 + 2 * x + 4 * x * m) * B[m]
        A.append((x * r1 + s * r2) / (4 * s * (m + 1)))
        B.append((x * r2 - r1) / (4 * s * (m + 1)))
    return [mp.re(v) / den for v in A], [mp.re(v) / den for v in B]


def jacobi_ab_coeffs(alpha, beta, x, K: int, basis: str = CHEBYSHEV_BASIS, prec=None) -> JacobiABCoeffs:
    """A_k, B_k streams for either basis.

    chebyshev: a_m by the explicit double sum, then
    A_k = 2 Im[a_k sqrt(1-x^2)] / ((1-x)^(alpha+1/2) (1+x)^(beta+1/2)),
    B_k = 2 Re[a_k] / (same denominator).
    legendre: generic two-point machinery on the unshifted factor.
    """
    with resolve_prec(prec).applied():
        x = to_mp(x)
        alpha = to_mp(alpha)
        beta = to_mp(beta)
        if not abs(x) < 1:
            raise ValueError("|x| must be < 1")
        if basis == CHEBYSHEV_BASIS:
            if K > 24:
                A, B = _ab_ode_stream(alpha, beta, x, K, mpf(1) / 2)
                return JacobiABCoeffs(basis=basis, A=tuple(A), B=tuple(B), a=())
            den = _normalizer(alpha + mpf(1) / 2, beta + mpf(1) / 2, x)
            root = mpmath.sqrt(1 - x**2)
            a = _a_series_stream(alpha, beta, x, K)
            A = tuple(2 * mp.im(am * root) / den for am in a)
            B = tuple(2 * mp.re(am) / den for am in a)
            return JacobiABCoeffs(basis=basis, A=A, B=B, a=tuple(a))
        if basis == LEGENDRE_BASIS:
            if K > 24:
                A, B = _ab_ode_stream(alpha, beta, x, K, mpf(0))
                return JacobiABCoeffs(basis=basis, A=tuple(A), B=tuple(B), a=())
            sd = jacobi_saddles(x)
            f = _f_provider(alpha, beta, x, shift=mpf(0))
            tp = two_point_coeffs(f, sd.w_plus, sd.w_minus, K, prec=mp.prec)
            ab = to_AB(tp)
            return JacobiABCoeffs(
                basis=basis,
                A=tuple(mp.re(v) for v in ab.A),
                B=tuple(mp.re(v) for v in ab.B),
                a=tuple(tp.a),
            )
        raise ValueError(f"unknown basis {basis!r}")


def jacobi_ab_coeffs_twopoint(alpha, beta, x, K: int, prec=None) -> JacobiABCoeffs:
    """Chebyshev-basis A_k, B_k via the generic machinery (cross-check)."""
    with resolve_prec(prec).applied():
        x = to_mp(x)
        sd = jacobi_saddles(x)
        f = _f_provider(alpha, beta, x, shift=mpf(1) / 2)
        tp = two_point_coeffs(f, sd.w_plus, sd.w_minus, K, prec=mp.prec)
        ab = to_AB(tp)
        return JacobiABCoeffs(
            basis=CHEBYSHEV_BASIS,
            A=tuple(mp.re(v) for v in ab.A),
            B=tuple(mp.re(v) for v in ab.B),
            a=tuple(tp.a),
        )


def jacobi_phi_psi(params: JacobiParams, K: int, basis: str = CHEBYSHEV_BASIS, prec=None) -> JacobiPhiPsi:
    """Phi/Psi streams through order K for the requested basis."""
    params.check_expansion_domain()
    with resolve_prec(prec).applied():
        if basis == CHEBYSHEV_BASIS:
            Phi, Psi = _cheb_raw(params.x, params.n, K)
        elif basis == LEGENDRE_BASIS:
            Phi, Psi = _legendre_raw(params.x, params.n, K)
        else:
            raise ValueError(f"unknown basis {basis!r}")
        return JacobiPhiPsi(basis=basis, phi=tuple(Phi), psi=tuple(Psi))


def phi_psi_direct(params: JacobiParams, k: int, prec=None):
    """Chebyshev-basis (Phi_k, Psi_k) by their finite direct sums."""
    with resolve_prec(prec).applied():
        return (
            _cheb_phi_direct(params.x, params.n, k),
            _cheb_psi_direct(params.x, params.n, k),
        )


def jacobi_expand(params: JacobiParams, N: int, basis: str = CHEBYSHEV_BASIS, stream: str = "auto", prec=None) -> ExpansionResult:
    """Partial sums S_0..S_N of the requested expansion (real mp values).

    ``stream`` as in the Laguerre driver: term pairs from the recurrences
    / finite sums ("recurrence"), or order-by-order quadrature
    ("quadrature", stable at any truncation depth).
    """
    params.check_expansion_domain()
    with resolve_prec(prec).applied():
        ab = jacobi_ab_coeffs(params.alpha, params.beta, params.x, N, basis=basis, prec=mp.prec)
        if stream == "auto":
            stream = "recurrence" if N <= max(12, params.n) else "quadrature"
        if stream == "recurrence":
            seq = jacobi_phi_psi(params, N, basis=basis, prec=mp.prec)
            phi, psi = seq.phi, seq.psi
        elif stream == "quadrature":
            phi, psi = contour_phi_psi_stream(params, N, basis=basis, prec=mp.prec)
        else:
            raise ValueError(f"unknown stream {stream!r}")
        running = mpf(0)
        partials = []
        last_mag = mpf(0)
        for k in range(N + 1):
            term = ab.A[k] * phi[k] + ab.B[k] * psi[k]
            running += term
            partials.append(running)
            last_mag = abs(term)
        return ExpansionResult(
            value=partials[-1],
            partial_sums=tuple(partials),
            terms_used=N + 1,
            truncation_order=N,
            error_estimate=last_mag,
        )


def default_contour(x) -> ContourSpec:
    """Radius keeping the branch points w = -x +- 1 outside the circle."""
    return ContourSpec(radius=float((1 - abs(float(x))) / 2), nodes=512)


def contour_phi_psi_stream(params: JacobiParams, K: int, basis: str = CHEBYSHEV_BASIS, contour: ContourSpec | None = None, prec=None):
    """Raw (Phi_0..Phi_K, Psi_0..Psi_K) by one quadrature sweep.

    Each order is computed independently (no recurrence error growth);
    this is the stable stream for deep partial sums.
    """
    with resolve_prec(prec).applied():
        x = to_mp(params.x)
        n = params.n
        contour = contour or default_contour(x)
        r = to_mp(contour.radius)
        if not r < 1 - abs(x):
            raise ValueError("contour radius must keep w = -x +- 1 outside the circle")
        M = contour.nodes
        acc_phi = [mpc(0)] * (K + 1)
        acc_psi = [mpc(0)] * (K + 1)
        for j in range(M):
            w = r * mpmath.exp(mpc(0, 2 * mpmath.pi * j / M))
            body = ((1 + w + x) * (1 - w - x) / w) ** n
            if basis == CHEBYSHEV_BASIS:
                body = body / mpmath.sqrt((1 - w - x) * (1 + w + x))
            base = w**2 + 1 - x**2
            f = body
            g = body * w
            for k in range(K + 1):
                acc_phi[k] += f
                acc_psi[k] += g
                f *= base
                g *= base
        pre = mpf(-1) ** n / mpf(2) ** n / M
        if basis == CHEBYSHEV_BASIS:
            pre = pre * mpmath.sqrt(1 - x**2)
        return [mp.re(pre * v) for v in acc_phi], [mp.re(pre * v) for v in acc_psi]


def contour_jacobi_oracle(params: JacobiParams, k: int, contour: ContourSpec | None = None, basis: str = CHEBYSHEV_BASIS, prec=None):
    """(Phi_k, Psi_k) by trapezoidal quadrature of their defining integrals.

    The chebyshev-basis pair integrates (w^2+1-x^2)^k e^{n phase} / W and
    the same times w, with W(x,w) = sqrt((1-w-x)(1+w+x)) and prefactor
    (-1)^n sqrt(1-x^2) / 2^n; the legendre-basis pair drops the W weight
    and the sqrt(1-x^2).  The contour must keep w = -x +- 1 outside.
    """
    with resolve_prec(prec).applied():
        x = to_mp(params.x)
        n = params.n
        contour = contour or default_contour(x)
        r = to_mp(contour.radius)
        if not r < 1 - abs(x):
            raise ValueError("contour radius must keep w = -x +- 1 outside the circle")
        M = contour.nodes
        acc_phi = mpc(0)
        acc_psi = mpc(0)
        for j in range(M):
            w = r * mpmath.exp(mpc(0, 2 * mpmath.pi * j / M))
            body = (w**2 + 1 - x**2) ** k * ((1 + w + x) * (1 - w - x) / w) ** n
            if basis == CHEBYSHEV_BASIS:
                wgt = mpmath.sqrt((1 - w - x) * (1 + w + x))
                acc_phi += body / wgt
                acc_psi += body * w / wgt
            else:
                acc_phi += body
                acc_psi += body * w
        pre = mpf(-1) ** n / mpf(2) ** n / M
        if basis == CHEBYSHEV_BASIS:
            pre = pre * mpmath.sqrt(1 - x**2)
        return mp.re(pre * acc_phi), mp.re(pre * acc_psi)


def contour_full_oracle(params: JacobiParams, contour: ContourSpec | None = None, prec=None):
    """P_n^(alpha,beta)(x) straight from its Cauchy-integral representation.

    The branch normalization takes (1-w-x)^alpha/(1-x)^alpha and
    (1+w+x)^beta/(1+x)^beta equal to 1 at w = 0.
    """
    with resolve_prec(prec).applied():
        x = to_mp(params.x)
        alpha = to_mp(params.alpha)
        beta = to_mp(params.beta)
        n = params.n
        contour = contour or default_contour(x)
        r = to_mp(contour.radius)
        if not r < 1 - abs(x):
            raise ValueError("contour radius must keep w = -x +- 1 outside the circle")
        M = contour.nodes
        acc = mpc(0)
        for j in range(M):
            w = r * mpmath.exp(mpc(0, 2 * mpmath.pi * j / M))
            acc += (
                ((1 - w - x) / (1 - x)) ** alpha
                * ((1 + w + x) / (1 + x)) ** beta
                * ((1 + w + x) * (1 - w - x) / w) ** n
            )
        return mp.re(mpf(-1) ** n / mpf(2) ** n * acc / M)
