"""Precision context, overflow-safe scalars, and reference polynomial evaluators.

Everything here is a pure function of its arguments plus an optional
precision context; there is no shared mutable state beyond mpmath's
context, which is saved/restored around every public call.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass

import mpmath
from mpmath import mp, mpc, mpf

DEFAULT_ORACLE_BITS = 256
DEFAULT_FAST_BITS = 64


@dataclass(frozen=True)
class PrecisionCtx:
    """Working precision for a computation, in mantissa bits (>= 64)."""

    mantissa_bits: int = DEFAULT_ORACLE_BITS

    def __post_init__(self):
        if self.mantissa_bits < 64:
            raise ValueError("mantissa_bits must be >= 64")

    @contextmanager
    def applied(self):
        with mpmath.workprec(self.mantissa_bits):
            yield


def resolve_prec(prec) -> PrecisionCtx:
    """Accept a PrecisionCtx, a bit count, or None (oracle default)."""
    if prec is None:
        return PrecisionCtx(DEFAULT_ORACLE_BITS)
    if isinstance(prec, PrecisionCtx):
        return prec
    return PrecisionCtx(int(prec))


def to_mp(x):
    """Coerce a Python / mpmath scalar to mpf or mpc at current precision."""
    if isinstance(x, (mpf, mpc)):
        return x
    if isinstance(x, complex):
        return mpc(x.real, x.imag)
    if isinstance(x, (int, float, str)):
        return mpf(x)
    return mpmath.mpmathify(x)


def is_complex(x) -> bool:
    return isinstance(x, (complex, mpc)) and mp.im(x) != 0


class SignedLogValue:
    """A scalar stored as sign (or unit phase) plus natural log of magnitude.

    Multiplication adds log-magnitudes; addition is routed through
    max-shifted exponentials so no intermediate ever overflows.  ``sign``
    is the integer 0 or +-1 for real values, and a unit-modulus mpc for
    complex ones.
    """

    __slots__ = ("sign", "log_mag")

    def __init__(self, sign, log_mag):
        self.sign = sign
        self.log_mag = log_mag

    @classmethod
    def zero(cls) -> "SignedLogValue":
        return cls(0, mpf("-inf"))

    @classmethod
    def from_value(cls, v) -> "SignedLogValue":
        v = to_mp(v)
        if v == 0:
            return cls.zero()
        if isinstance(v, mpc) and mp.im(v) != 0:
            m = abs(v)
            return cls(v / m, mpmath.log(m))
        v = mp.re(v) if isinstance(v, mpc) else v
        return cls(1 if v > 0 else -1, mpmath.log(abs(v)))

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def value(self):
        """The represented number as mpf/mpc (exact sign, rounded magnitude)."""
        if self.is_zero:
            return mpf(0)
        return self.sign * mpmath.exp(self.log_mag)

    def __float__(self):
        if self.is_zero:
            return 0.0
        if isinstance(self.sign, mpc):
            raise TypeError("complex SignedLogValue has no float value")
        if self.log_mag > 700:
            return math.inf * self.sign
        return float(self.sign) * math.exp(float(self.log_mag))

    def magnitude(self):
        """|value| as mpf (may overflow float, never overflows mpf)."""
        return mpmath.exp(self.log_mag) if not self.is_zero else mpf(0)

    def __abs__(self) -> "SignedLogValue":
        return SignedLogValue(0 if self.is_zero else 1, self.log_mag)

    def __neg__(self) -> "SignedLogValue":
        return SignedLogValue(-self.sign, self.log_mag)

    def __mul__(self, other) -> "SignedLogValue":
        if not isinstance(other, SignedLogValue):
            other = SignedLogValue.from_value(other)
        if self.is_zero or other.is_zero:
            return SignedLogValue.zero()
        return SignedLogValue(self.sign * other.sign, self.log_mag + other.log_mag)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SignedLogValue":
        if not isinstance(other, SignedLogValue):
            other = SignedLogValue.from_value(other)
        if other.is_zero:
            raise ZeroDivisionError("SignedLogValue division by zero")
        if self.is_zero:
            return SignedLogValue.zero()
        return SignedLogValue(self.sign / other.sign, self.log_mag - other.log_mag)

    def __add__(self, other) -> "SignedLogValue":
        if not isinstance(other, SignedLogValue):
            other = SignedLogValue.from_value(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        shift = max(self.log_mag, other.log_mag)
        v = self.sign * mpmath.exp(self.log_mag - shift) + other.sign * mpmath.exp(
            other.log_mag - shift
        )
        if v == 0:
            return SignedLogValue.zero()
        out = SignedLogValue.from_value(v)
        return SignedLogValue(out.sign, out.log_mag + shift)

    __radd__ = __add__

    def __sub__(self, other) -> "SignedLogValue":
        if not isinstance(other, SignedLogValue):
            other = SignedLogValue.from_value(other)
        return self + (-other)

    def __repr__(self):
        return f"SignedLogValue(sign={self.sign}, log_mag={self.log_mag})"


def slv_sum(terms) -> SignedLogValue:
    """Pairwise (tree) summation of SignedLogValue terms."""
    items = list(terms)
    if not items:
        return SignedLogValue.zero()
    while len(items) > 1:
        nxt = [items[i] + items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def pochhammer(a, n: int, prec=None):
    """Rising factorial a(a+1)...(a+n-1); 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be a nonnegative integer")
    with resolve_prec(prec).applied():
        a = to_mp(a)
        out = a * 0 + 1
        for i in range(n):
            out *= a + i
        return out


def falling_factorial(a, n: int):
    """a(a-1)...(a-n+1); 1 for n = 0.  Uses the ambient precision."""
    out = to_mp(a) * 0 + 1
    for i in range(n):
        out *= a - i
    return out


def binom_general(a, k: int, prec=None):
    """Generalized binomial a(a-1)...(a-k+1)/k! via the falling product.

    The product form stays finite for negative-integer upper arguments,
    where a Gamma-ratio formulation would hit poles.
    """
    if k < 0:
        raise ValueError("k must be a nonnegative integer")
    with resolve_prec(prec).applied():
        return falling_factorial(to_mp(a), k) / mpmath.factorial(k)


_RESCALE_LIMIT_LOG2 = 4096


class _ScaledPair:
    """Two consecutive recurrence values with a shared log-scale offset.

    This is the working form of SignedLogValue arithmetic for long
    three-term recurrences: values are kept as ordinary mp numbers and a
    log offset is peeled off whenever they grow past 2**4096.
    """

    __slots__ = ("prev", "cur", "log_scale")

    def __init__(self, prev, cur):
        self.prev = prev
        self.cur = cur
        self.log_scale = mpf(0)

    def step(self, new):
        self.prev, self.cur = self.cur, new
        m = max(abs(self.prev), abs(self.cur))
        if m > mpf(2) ** _RESCALE_LIMIT_LOG2 or (m != 0 and m < mpf(2) ** -_RESCALE_LIMIT_LOG2):
            self.prev /= m
            self.cur /= m
            self.log_scale += mpmath.log(m)

    def current_slv(self) -> SignedLogValue:
        out = SignedLogValue.from_value(self.cur)
        if out.is_zero:
            return out
        return SignedLogValue(out.sign, out.log_mag + self.log_scale)


def hermite_eval(n: int, y, prec=None) -> SignedLogValue:
    """Physicists' Hermite polynomial H_n(y) via H_{k+1} = 2yH_k - 2kH_{k-1}.

    Carried in log-scaled form: H_n overflows double precision already
    near n ~ 90 for the arguments used by the Laguerre leading terms.
    """
    if n < 0:
        raise ValueError("n must be a nonnegative integer")
    with resolve_prec(prec).applied():
        y = to_mp(y)
        if n == 0:
            return SignedLogValue.from_value(1)
        pair = _ScaledPair(y * 0 + 1, 2 * y)
        for k in range(1, n):
            pair.step(2 * y * pair.cur - 2 * k * pair.prev)
        return pair.current_slv()


def chebyshev_T(n: int, x, prec=None):
    """Chebyshev T_n(x): trig form on [-1, 1], recurrence outside."""
    if n < 0:
        raise ValueError("n must be a nonnegative integer")
    with resolve_prec(prec).applied():
        x = to_mp(x)
        if not is_complex(x) and -1 <= x <= 1:
            return mpmath.cos(n * mpmath.acos(x))
        return _cheb_recurrence(n, x, x * 0 + 1, x)


def chebyshev_U(n: int, x, prec=None):
    """Chebyshev U_n(x): trig form on (-1, 1), recurrence outside."""
    if n < 0:
        raise ValueError("n must be a nonnegative integer")
    with resolve_prec(prec).applied():
        x = to_mp(x)
        if not is_complex(x) and -1 < x < 1:
            th = mpmath.acos(x)
            return mpmath.sin((n + 1) * th) / mpmath.sin(th)
        return _cheb_recurrence(n, x, x * 0 + 1, 2 * x)


def _cheb_recurrence(n, x, p0, p1):
    if n == 0:
        return p0
    for _ in range(1, n):
        p0, p1 = p1, 2 * x * p1 - p0
    return p1


def laguerre_direct(alpha, n: int, x, prec=None) -> SignedLogValue:
    """Laguerre polynomial L_n^(alpha)(x) as the exact finite sum.

    Sum over k of (-1)^k C(n+alpha, n-k) x^k / k!, accumulated by pairwise
    summation of log-scaled terms (the sum alternates with huge terms for
    the large arguments this library feeds it).  Degree n < 0 returns 0.
    """
    with resolve_prec(prec).applied():
        if n < 0:
            return SignedLogValue.zero()
        alpha = to_mp(alpha)
        x = to_mp(x)
        term = binom_general(n + alpha, n, prec=mp.prec)  # k = 0 term
        terms = [SignedLogValue.from_value(term)]
        for k in range(n):
            # t_{k+1}/t_k = -x (n-k) / ((k+1)(alpha+k+1))
            term = term * (-x) * (n - k) / ((k + 1) * (alpha + k + 1))
            terms.append(SignedLogValue.from_value(term))
        return slv_sum(terms)


def jacobi_direct(alpha, beta, n: int, x, prec=None):
    """Jacobi polynomial P_n^(alpha,beta)(x) by the three-term recurrence.

    Degree n < 0 returns 0 (empty Cauchy coefficient), which the shifted
    finite sums rely on.
    """
    with resolve_prec(prec).applied():
        if n < 0:
            return mpf(0)
        alpha = to_mp(alpha)
        beta = to_mp(beta)
        x = to_mp(x)
        if n == 0:
            return x * 0 + 1
        p0 = x * 0 + 1
        p1 = (alpha - beta) / 2 + (alpha + beta + 2) * x / 2
        for m in range(2, n + 1):
            c1 = 2 * m * (m + alpha + beta) * (2 * m + alpha + beta - 2)
            c2 = (2 * m + alpha + beta - 1) * (
                (2 * m + alpha + beta) * (2 * m + alpha + beta - 2) * x
                + alpha**2 - beta**2
            )
            c3 = 2 * (m + alpha - 1) * (m + beta - 1) * (2 * m + alpha + beta)
            p0, p1 = p1, (c2 * p1 - c3 * p0) / c1
        return p1


def charlier_direct(a, n: int, x, prec=None) -> SignedLogValue:
    """Charlier polynomial C_n^a(x) as the exact finite sum.

    Sum over k of C(n,k) * x(x-1)...(x-k+1) * (-a)^(n-k), pairwise-summed
    in log-scaled form.  This is the primary Charlier oracle.
    """
    if n < 0:
        raise ValueError("n must be a nonnegative integer")
    with resolve_prec(prec).applied():
        a = to_mp(a)
        x = to_mp(x)
        if a == 0:
            # only the k = n term survives
            return SignedLogValue.from_value(falling_factorial(x, n))
        term = (-a) ** n  # k = 0
        terms = [SignedLogValue.from_value(term)]
        for k in range(n):
            term = term * (n - k) * (x - k) / ((k + 1) * (-a))
            terms.append(SignedLogValue.from_value(term))
        return slv_sum(terms)
