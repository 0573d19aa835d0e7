"""One- and two-point Taylor machinery.

A function analytic at two points w1 != w2 has an expansion

    f(w) = sum_k [a_k (w - w1) + a_k' (w - w2)] * [(w - w1)(w - w2)]^k,

uniformly convergent inside the Cassini oval |w - w1||w - w2| < r whose
"radius" r is set by the nearest singularity.  The linear-in-w bracket can
be rewritten as [A_k + B_k w]; both coefficient forms are provided.

Derivative providers are callables ``f(w, m) -> m-th derivative at w``;
the family-specific functions used elsewhere in this package all have
closed-form derivative chains, built from the factories below.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mpf

from .numerics import falling_factorial, resolve_prec, to_mp


def poly_provider(coeffs):
    """Provider for p(w) = sum coeffs[i] w^i."""

    def deriv(w, m):
        w = to_mp(w)
        out = w * 0
        for i in range(m, len(coeffs)):
            out += to_mp(coeffs[i]) * falling_factorial(i, m) * w ** (i - m)
        return out

    return deriv


def exp_provider(a):
    """Provider for f(w) = exp(a w)."""

    def deriv(w, m):
        a_ = to_mp(a)
        return a_**m * mpmath.exp(a_ * to_mp(w))

    return deriv


def power_provider(c, const, slope):
    """Provider for f(w) = (const + slope*w)^c, principal branch.

    f^(m)(w) = c(c-1)...(c-m+1) * slope^m * (const + slope*w)^(c-m).
    """

    def deriv(w, m):
        c_ = to_mp(c)
        base = to_mp(const) + to_mp(slope) * to_mp(w)
        return falling_factorial(c_, m) * to_mp(slope) ** m * base ** (c_ - m)

    return deriv


def product_provider(f, g):
    """Leibniz-rule provider for f*g given providers for each factor."""

    def deriv(w, m):
        out = None
        for j in range(m + 1):
            term = mpmath.binomial(m, j) * f(w, j) * g(w, m - j)
            out = term if out is None else out + term
        return out

    return deriv


def scaled_provider(f, scale):
    """Provider for scale * f."""

    def deriv(w, m):
        return to_mp(scale) * f(w, m)

    return deriv


@dataclass(frozen=True)
class TwoPointCoeffs:
    """Coefficient streams a_k, a_k' for foci (w1, w2), in that order."""

    w1: complex
    w2: complex
    a: tuple
    a_prime: tuple


@dataclass(frozen=True)
class ABCoeffs:
    """The same expansion with linear factors rewritten as A_k + B_k w."""

    A: tuple
    B: tuple


@dataclass(frozen=True)
class CassiniOval:
    """Region |w - w1||w - w2| < r."""

    w1: complex
    w2: complex
    r: float

    def product(self, w):
        w = to_mp(w)
        return abs(w - to_mp(self.w1)) * abs(w - to_mp(self.w2))

    def contains(self, w) -> bool:
        return self.product(w) < self.r


def single_point_coeffs(f, w0, K: int, prec=None):
    """Taylor coefficients c_k = f^(k)(w0)/k!, k = 0..K."""
    with resolve_prec(prec).applied():
        w0 = to_mp(w0)
        return [f(w0, k) / mpmath.factorial(k) for k in range(K + 1)]


def two_point_coeffs(f, w1, w2, K: int, prec=None) -> TwoPointCoeffs:
    """Two-point Taylor coefficient streams a_k, a_k' at foci (w1, w2).

    a_0 = f(w2)/(w2 - w1), a_0' = f(w1)/(w1 - w2), and for k >= 1 each
    coefficient is a finite double sum over derivatives of f at both foci.
    """
    with resolve_prec(prec).applied():
        w1 = to_mp(w1)
        w2 = to_mp(w2)
        if w1 == w2:
            raise ValueError("degenerate foci: w1 == w2 (use single_point_coeffs)")
        d12 = w1 - w2
        a = [f(w2, 0) / (w2 - w1)]
        ap = [f(w1, 0) / (w1 - w2)]
        fact = [mpmath.factorial(i) for i in range(2 * K + 1)]
        d1 = [f(w1, m) for m in range(K + 1)]
        d2 = [f(w2, m) for m in range(K + 1)]
        for n in range(1, K + 1):
            s = 0
            sp = 0
            for k in range(n + 1):
                c = fact[n + k - 1] / (fact[k] * fact[n - k])
                num = (-1) ** (n + 1) * n * d2[n - k] + (-1) ** k * k * d1[n - k]
                nump = (-1) ** (n + 1) * n * d1[n - k] + (-1) ** k * k * d2[n - k]
                s += c * num / d12 ** (n + k + 1)
                sp += c * nump / (-d12) ** (n + k + 1)
            a.append(s / fact[n])
            ap.append(sp / fact[n])
        return TwoPointCoeffs(w1=w1, w2=w2, a=tuple(a), a_prime=tuple(ap))


def to_AB(tp: TwoPointCoeffs) -> ABCoeffs:
    """Rewrite a_k(w - w1) + a_k'(w - w2) as A_k + B_k w.

    Identifying coefficients of 1 and w gives A_k = -(a_k w1 + a_k' w2)
    and B_k = a_k + a_k'; the reconstruction tests pin this assignment to
    the foci order recorded in the TwoPointCoeffs.
    """
    w1 = to_mp(tp.w1)
    w2 = to_mp(tp.w2)
    A = tuple(-(ak * w1 + apk * w2) for ak, apk in zip(tp.a, tp.a_prime))
    B = tuple(ak + apk for ak, apk in zip(tp.a, tp.a_prime))
    return ABCoeffs(A=A, B=B)


def reconstruct(tp: TwoPointCoeffs, w, K: int | None = None):
    """Partial sum of the two-point expansion at w, through order K."""
    w = to_mp(w)
    w1 = to_mp(tp.w1)
    w2 = to_mp(tp.w2)
    K = len(tp.a) - 1 if K is None else K
    base = (w - w1) * (w - w2)
    out = w * 0
    pk = w * 0 + 1
    for k in range(K + 1):
        out += (tp.a[k] * (w - w1) + tp.a_prime[k] * (w - w2)) * pk
        pk *= base
    return out


def reconstruct_AB(ab: ABCoeffs, w1, w2, w, K: int | None = None):
    """Partial sum of sum_k [A_k + B_k w] [(w-w1)(w-w2)]^k at w."""
    w = to_mp(w)
    base = (w - to_mp(w1)) * (w - to_mp(w2))
    K = len(ab.A) - 1 if K is None else K
    out = w * 0
    pk = w * 0 + 1
    for k in range(K + 1):
        out += (to_mp(ab.A[k]) + to_mp(ab.B[k]) * w) * pk
        pk *= base
    return out


def cassini_region(w1, w2, singularities, prec=None) -> CassiniOval:
    """Convergence oval: r is the smallest |s - w1||s - w2| over singular s."""
    if not singularities:
        raise ValueError("singularity list must be nonempty")
    with resolve_prec(prec).applied():
        w1 = to_mp(w1)
        w2 = to_mp(w2)
        r = min(abs(to_mp(s) - w1) * abs(to_mp(s) - w2) for s in singularities)
        return CassiniOval(w1=w1, w2=w2, r=r)
