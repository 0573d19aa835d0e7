"""Further convergent expansions: modified Bessel I and K, and Kummer's 1F1.

Three series built from the same expand-inside-the-integral idea:

* I_nu(z) in lower incomplete gamma functions (convergent for nu > -1/2,
  terms O(k^(-nu-3/2))),
* K_nu(z) in confluent hypergeometric U-functions (terms decay like
  k^c e^(-2 sqrt(2kz)) / k!),
* 1F1(a, c; z) in J-Bessel functions with generating-function
  coefficients (Tricomi's expansion; convergent in the whole z-plane and
  asymptotic for large kappa = c/2 - a).
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mp, mpc, mpf

from .numerics import binom_general, is_complex, resolve_prec, to_mp
from .results import ExpansionResult


@dataclass(frozen=True)
class BesselParams:
    nu: float
    z: float

    def __post_init__(self):
        if not float(self.z) > 0:
            raise ValueError("z must be positive")


@dataclass(frozen=True)
class KummerParams:
    a: float
    c: float
    z: float

    @property
    def kappa(self):
        return to_mp(self.c) / 2 - to_mp(self.a)

    @property
    def lam(self):
        return to_mp(self.c) / 2


@dataclass(frozen=True)
class TricomiCoeffs:
    kappa: float
    lam: float
    terms: tuple


def lower_incomplete_gamma(a, x, prec=None):
    """gamma(a, x) for a, x > 0 via the regularized power series.

    gamma(a,x) = x^a e^-x sum_{m>=0} x^m / (a (a+1) ... (a+m)).
    """
    with resolve_prec(prec).applied():
        a = to_mp(a)
        x = to_mp(x)
        if not (a > 0 and x > 0):
            raise ValueError("series form needs a > 0 and x > 0")
        term = 1 / a
        total = term
        m = 0
        floor = mpf(2) ** (-mp.prec - 8)
        while True:
            m += 1
            term *= x / (a + m)
            total += term
            if term < total * floor:
                break
        return x**a * mpmath.exp(-x) * total


def lower_incomplete_gamma_sequence(a0, x, count: int, prec=None):
    """[gamma(a0 + k, x) for k = 0..count-1], stepped backward.

    The top order comes from the power series; lower orders follow from
    gamma(a, x) = (gamma(a+1, x) + x^a e^-x) / a, a sum of positive
    quantities, so the backward direction is unconditionally stable.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    with resolve_prec(prec).applied():
        a0 = to_mp(a0)
        x = to_mp(x)
        out = [mpf(0)] * count
        out[-1] = lower_incomplete_gamma(a0 + count - 1, x, prec=mp.prec)
        emx = mpmath.exp(-x)
        for k in range(count - 1, 0, -1):
            a = a0 + k - 1
            out[k - 1] = (out[k] + x**a * emx) / a
        return out


def upper_incomplete_gamma(s, x, prec=None):
    """Gamma(s, x) for x > 0 and any real s.

    Continued fraction (modified Lentz) when x > s + 1, otherwise
    Gamma(s) - gamma(s, x); nonpositive-integer s in the second branch is
    reached by stepping down from a regular order.
    """
    with resolve_prec(prec).applied():
        s = to_mp(s)
        x = to_mp(x)
        if not x > 0:
            raise ValueError("x must be positive")
        if x > s + 1:
            return _upper_gamma_cf(s, x)
        if s > 0:
            return mpmath.gamma(s) - lower_incomplete_gamma(s, x, prec=mp.prec)
        if s == 0:
            return mpmath.e1(x)
        # s < 0 with x <= s+1: step down from an order in (0, 1] via
        # Gamma(s, x) = (Gamma(s+1, x) - x^s e^-x) / s
        m = int(mpmath.floor(1 - s))
        val = upper_incomplete_gamma(s + m, x, prec=mp.prec)
        for i in range(m):
            si = s + m - 1 - i
            if si == 0:
                val = mpmath.e1(x)
                continue
            val = (val - x**si * mpmath.exp(-x)) / si
        return val


def _upper_gamma_cf(s, x):
    tiny = mpf(2) ** (-mp.prec * 2)
    b0 = x + 1 - s
    c = b0 if b0 != 0 else tiny
    d = mpf(0)
    f = c
    tol = mpf(2) ** (-mp.prec - 8)
    for i in range(1, 100000):
        an = -i * (i - s)
        bn = x + 2 * i + 1 - s
        d = bn + an * d
        if d == 0:
            d = tiny
        c = bn + an / c
        if c == 0:
            c = tiny
        d = 1 / d
        delta = c * d
        f *= delta
        if abs(delta - 1) < tol:
            break
    return mpmath.exp(-x + s * mpmath.log(x)) / f


def besseli_series(nu, z, prec=None):
    """Ascending series of I_nu(z): the independent oracle."""
    with resolve_prec(prec).applied():
        nu = to_mp(nu)
        z = to_mp(z)
        half = z / 2
        term = mpmath.exp(nu * mpmath.log(half) - mpmath.loggamma(nu + 1))
        total = term
        m = 0
        floor = mpf(2) ** (-mp.prec - 8)
        while True:
            m += 1
            term *= half**2 / (m * (nu + m))
            total += term
            if abs(term) < abs(total) * floor:
                break
        return total


def besseli_expand(params: BesselParams, N: int, prec=None) -> ExpansionResult:
    """I_nu(z) as an incomplete-gamma series.

    e^z / (sqrt(2 z pi) Gamma(nu+1/2)) * sum_k (-1)^k C(nu-1/2, k)
    gamma(nu+k+1/2, 2z) / (2z)^k, with all the gammas filled by one
    backward-recursion sweep.
    """
    with resolve_prec(prec).applied():
        nu = to_mp(params.nu)
        z = to_mp(params.z)
        if not nu > mpf(-1) / 2:
            raise ValueError("convergence requires nu > -1/2")
        x = 2 * z
        gammas = lower_incomplete_gamma_sequence(nu + mpf(1) / 2, x, N + 1, prec=mp.prec)
        pref = mpmath.exp(z) / (mpmath.sqrt(2 * z * mpmath.pi) * mpmath.gamma(nu + mpf(1) / 2))
        binom = mpf(1)
        running = mpf(0)
        partials = []
        last = mpf(0)
        for k in range(N + 1):
            if k > 0:
                binom *= (nu - mpf(1) / 2 - (k - 1)) / k
            term = (-1) ** k * binom * gammas[k] / x**k
            running += term
            partials.append(pref * running)
            last = abs(pref * term)
        return ExpansionResult(
            value=partials[-1],
            partial_sums=tuple(partials),
            terms_used=N + 1,
            truncation_order=N,
            error_estimate=last,
        )


def u_sequence(kmax: int, b, x, prec=None):
    """[U(k, b, x) for k = 0..kmax] by the first-parameter recursion.

    U(0,b,x) = 1, U(1,b,x) = x^(1-b) e^x Gamma(b-1, x), then
    a(a-b+1) U(a+1) = (2a - b + x) U(a) - U(a-1).
    """
    with resolve_prec(prec).applied():
        target = mp.prec
        # forward recursion slowly admixes a dominant parasite (~0.3 bits
        # per step); run with headroom and round the results back down
        with mpmath.workprec(target + kmax // 2 + 16):
            b = to_mp(b)
            x = to_mp(x)
            if not x > 0:
                raise ValueError("x must be positive")
            out = [mpf(1)]
            if kmax >= 1:
                out.append(x ** (1 - b) * mpmath.exp(x) * upper_incomplete_gamma(b - 1, x, prec=mp.prec))
            for a in range(1, kmax):
                out.append(((2 * a - b + x) * out[a] - out[a - 1]) / (a * (a - b + 1)))
        return [+v for v in out]


def u_function(k: int, b, x, prec=None):
    """Confluent hypergeometric U(k, b, x) for nonnegative integer k."""
    if k < 0:
        raise ValueError("k must be a nonnegative integer")
    return u_sequence(k, b, x, prec=prec)[k]


ADAPTIVE_K_MAX_ORDER = 400


def besselk_expand(nu, z, N: int | None = None, prec=None) -> ExpansionResult:
    """K_nu(z) as a U-function series.

    sqrt(pi/(2z)) e^-z sum_k (nu+1/2)_k (nu-1/2)_k / k! U(k, 1/2-nu, 2z).
    With N=None the sum stops once the last term is negligible (the terms
    decay like k^c e^(-2 sqrt(2kz))).
    """
    with resolve_prec(prec).applied():
        nu = to_mp(nu)
        z = to_mp(z)
        order = ADAPTIVE_K_MAX_ORDER if N is None else N
        us = u_sequence(order, mpf(1) / 2 - nu, 2 * z, prec=mp.prec)
        pref = mpmath.sqrt(mpmath.pi / (2 * z)) * mpmath.exp(-z)
        coeff = mpf(1)
        running = mpf(0)
        partials = []
        last = mpf(0)
        floor = mpf(10) ** (-mp.dps + 4)
        for k in range(order + 1):
            if k > 0:
                coeff *= (nu + mpf(1) / 2 + (k - 1)) * (nu - mpf(1) / 2 + (k - 1)) / k
            term = coeff * us[k]
            running += term
            partials.append(pref * running)
            last = abs(pref * term)
            if N is None and k > 2 and last < abs(pref * running) * floor:
                break
        return ExpansionResult(
            value=partials[-1],
            partial_sums=tuple(partials),
            terms_used=len(partials),
            truncation_order=len(partials) - 1,
            error_estimate=last,
        )


def besselk_quadrature(nu, z, prec=None):
    """K_nu(z) by direct quadrature of its Laplace-type integral (oracle).

    sqrt(pi) (2z)^nu e^-z / Gamma(nu+1/2) * int_0^inf e^(-2zt) [t(1+t)]^(nu-1/2) dt,
    valid for nu > -1/2.
    """
    with resolve_prec(prec).applied():
        nu = to_mp(nu)
        z = to_mp(z)
        if not nu > mpf(-1) / 2:
            raise ValueError("integral form needs nu > -1/2")
        body = lambda t: mpmath.exp(-2 * z * t) * (t * (1 + t)) ** (nu - mpf(1) / 2)
        integral = mpmath.quad(body, [0, 1, mpmath.inf])
        pref = mpmath.sqrt(mpmath.pi) * (2 * z) ** nu * mpmath.exp(-z) / mpmath.gamma(nu + mpf(1) / 2)
        return pref * integral


def bessel_j_series(mu, t, prec=None):
    """J_mu(t) by its ascending series; complex t supported (plumbing)."""
    with resolve_prec(prec).applied():
        mu = to_mp(mu)
        t = to_mp(t)
        half = t / 2
        if half == 0:
            return mpf(1) if mu == 0 else mpf(0)
        term = mpmath.exp(mu * mpmath.log(half) - mpmath.loggamma(mu + 1))
        total = term
        m = 0
        floor = mpf(2) ** (-mp.prec - 8)
        while True:
            m += 1
            term *= -(half**2) / (m * (mu + m))
            total += term
            if abs(term) < abs(total) * floor and m > 4:
                break
        return total


def tricomi_coeffs(kappa, lam, N: int, prec=None) -> TricomiCoeffs:
    """Coefficients A_n of e^{2 kappa z} (1-z)^{kappa-lam} (1+z)^{-kappa-lam}.

    Exact power-series convolution of the three factors; A_0 = 1 and
    A_1 = 0 always (the exponent and the two powers cancel at first
    order).
    """
    with resolve_prec(prec).applied():
        kappa = to_mp(kappa)
        lam = to_mp(lam)
        expo = [mpf(1)]
        for n in range(1, N + 1):
            expo.append(expo[-1] * 2 * kappa / n)
        f1 = [binom_general(kappa - lam, n, prec=mp.prec) * (-1) ** n for n in range(N + 1)]
        f2 = [binom_general(-kappa - lam, n, prec=mp.prec) for n in range(N + 1)]
        g = [sum(f1[i] * f2[m - i] for i in range(m + 1)) for m in range(N + 1)]
        a = [sum(expo[i] * g[m - i] for i in range(m + 1)) for m in range(N + 1)]
        return TricomiCoeffs(kappa=kappa, lam=lam, terms=tuple(a))


def tricomi_generating_value(kappa, lam, z, prec=None):
    """Direct value of the generating function (for residual tests)."""
    with resolve_prec(prec).applied():
        kappa = to_mp(kappa)
        lam = to_mp(lam)
        z = to_mp(z)
        return mpmath.exp(2 * kappa * z) * (1 - z) ** (kappa - lam) * (1 + z) ** (-kappa - lam)


def kummer_series(a, c, z, prec=None):
    """1F1(a, c; z) by its defining series: the independent oracle."""
    with resolve_prec(prec).applied():
        a = to_mp(a)
        c = to_mp(c)
        z = to_mp(z)
        term = mpf(1)
        total = term
        m = 0
        floor = mpf(2) ** (-mp.prec - 8)
        while True:
            term *= (a + m) * z / ((c + m) * (m + 1))
            total += term
            m += 1
            if abs(term) < abs(total) * floor and m > 4:
                break
            if term == 0:
                break
        return total


def kummer_expand(params: KummerParams, N: int, prec=None) -> ExpansionResult:
    """Tricomi's J-Bessel expansion of 1F1(a, c; z).

    e^{z/2} Gamma(c) (kappa z)^{(1-c)/2} * sum_n A_n(kappa, c/2)
    (z/(4 kappa))^{n/2} J_{c-1+n}(2 sqrt(kappa z)); principal powers make
    the negative kappa*z case work through complex intermediates.
    """
    with resolve_prec(prec).applied():
        kappa = params.kappa
        if kappa == 0:
            raise ValueError("kappa = c/2 - a must be nonzero")
        if kappa < 0:
            # reflect 1F1(a,c;z) = e^z 1F1(c-a,c;-z), which flips kappa's
            # sign while keeping kappa*z; the series converges to a wrong
            # value if applied directly with kappa < 0
            inner = kummer_expand(
                KummerParams(a=params.c - params.a, c=params.c, z=-params.z), N, prec=mp.prec
            )
            ez = mpmath.exp(to_mp(params.z))
            return ExpansionResult(
                value=ez * inner.value,
                partial_sums=tuple(ez * s for s in inner.partial_sums),
                terms_used=inner.terms_used,
                truncation_order=inner.truncation_order,
                error_estimate=abs(ez) * inner.error_estimate,
            )
        c = to_mp(params.c)
        z = to_mp(params.z)
        if z == 0:
            one = mpf(1)
            return ExpansionResult(
                value=one, partial_sums=(one,), terms_used=1,
                truncation_order=0, error_estimate=mpf(0),
            )
        coeffs = tricomi_coeffs(kappa, params.lam, N, prec=mp.prec)
        kz = kappa * z
        log_kz = mpmath.log(mpc(kz))
        pref = mpmath.exp(z / 2) * mpmath.gamma(c) * mpmath.exp((1 - c) / 2 * log_kz)
        root = mpmath.exp(log_kz / 2)
        ratio = mpmath.exp(mpmath.log(mpc(z / (4 * kappa))) / 2)
        running = mpc(0)
        partials = []
        last = mpf(0)
        for n in range(N + 1):
            term = coeffs.terms[n] * ratio**n * bessel_j_series(c - 1 + n, 2 * root, prec=mp.prec)
            running += term
            val = pref * running
            if abs(mp.im(val)) <= abs(val) * mpf(2) ** (-mp.prec // 2):
                val = mp.re(val)
            partials.append(val)
            last = abs(pref * term)
        return ExpansionResult(
            value=partials[-1],
            partial_sums=tuple(partials),
            terms_used=N + 1,
            truncation_order=N,
            error_estimate=last,
        )
