"""Verification suites: order slopes, oracle agreement, geometry, tables.

Each suite returns a list of CheckResult records; a record is either a
hard pass/fail check or an informational "known-deviation" note (counted
as passing, with the measured numbers kept in the detail string).  The
CLI ``verify`` command prints one line per record; the acceptance tests
assert on the same records, so there is exactly one implementation of
every numeric experiment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
from mpmath import mp, mpc, mpf

from . import bessel_kummer as bk
from . import charlier as ch
from . import jacobi as jc
from . import laguerre as lg
from .charlier import CharlierParams
from .jacobi import JacobiParams
from .laguerre import LaguerreParams
from .numerics import (
    charlier_direct,
    falling_factorial,
    jacobi_direct,
    laguerre_direct,
    resolve_prec,
    to_mp,
)
from .results import ContourSpec
from .two_point_taylor import cassini_region

SLOPE_TOL = 0.3


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    known_deviation: bool = False


def _check(name, cond, detail=""):
    return CheckResult(name=name, passed=bool(cond), detail=detail)


def _note(name, detail):
    return CheckResult(name=name, passed=True, detail=detail, known_deviation=True)


def _rel(a, b, scale=None):
    a = to_mp(a)
    b = to_mp(b)
    m = max(abs(a), abs(b))
    if scale is not None:
        m = max(m, abs(to_mp(scale)))
    if m == 0:
        return mpf(0)
    return abs(a - b) / m


# ---------------------------------------------------------------------------
# reference table data (printed values being reproduced)
# ---------------------------------------------------------------------------

TABLE_CHARLIER_ZEROS_N10_A1 = [
    "0.000000090", "0.100006223", "0.200157621", "0.301812498", "0.410358953",
    "0.534449998", "0.680932968", "0.855641877", "1.068772397", "1.347867376",
]

# rows: n -> [exact, S_0..S_5]; row-wise scaling removed by using ratios
TABLE_CHARLIER_CONV = {
    10: ["-1.03630", "-0.97736", "-1.02335", "-1.04747", "-1.00438", "-1.03633", "-1.0363"],
    30: ["4.35872", "4.03823", "4.28867", "4.35077", "4.35762", "4.35858", "4.35870"],
    50: ["-4.86727", "-4.65813", "-4.82829", "-4.86464", "-4.86701", "-4.86725", "-4.86726"],
    90: ["-2.94851", "-2.87926", "-2.93699", "-2.94808", "-2.94848", "-2.94851", "-2.94851"],
}
CHARLIER_CONV_DEVIANT_ROWS = (10,)

TABLE_LAGUERRE_CONV = {
    10: ["0.340506", "0.343249", "0.341724", "0.340495", "0.340449", "0.340490", "0.340504"],
    30: ["-8.94039", "-8.86531", "-9.03530", "-8.95798", "-8.94213", "-8.94045", "-8.94038"],
    50: ["-5.05678", "-5.05941", "-5.06764", "-5.05801", "-5.05689", "-5.05680", "-5.05678"],
    90: ["6.56556", "6.56328", "6.57572", "6.56601", "6.56547", "6.56553", "6.56556"],
}

TABLE_JACOBI_CONV = {
    10: ["-0.336376", "-0.348029", "-0.348029", "-0.337153", "-0.336376", "-0.336340", "-0.336360"],
    30: ["-0.201847", "-0.204304", "-0.204304", "-0.201909", "-0.201839", "-0.201845", "-0.201847"],
    50: ["-0.157618", "-0.158781", "-0.158781", "-0.157636", "-0.157615", "-0.157617", "-0.157618"],
    90: ["-0.118124", "-0.118612", "-0.118612", "-0.118128", "-0.118123", "-0.118124", "-0.118124"],
}
JACOBI_CONV_REPRODUCIBLE_COLS = (0,)  # besides the exact column


# ---------------------------------------------------------------------------
# order-slope machinery
# ---------------------------------------------------------------------------


def _ls_slope(xs, ys):
    m = len(xs)
    sx = sum(xs)
    sy = sum(ys)
    sxx = sum(a * a for a in xs)
    sxy = sum(a * b for a, b in zip(xs, ys))
    return (m * sxy - sx * sy) / (m * sxx - sx * sx)


def _bucket_slope(samples, buckets):
    """LS slope of 0.5*log(bucket RMS num^2 / bucket RMS den^2) vs log n.

    Numerator and denominator are RMS-averaged separately over each
    bucket so that oscillation nodes in either stream cannot spike the
    ratio.
    """
    xs = []
    ys = []
    for lo, hi in buckets:
        num = mpf(0)
        den = mpf(0)
        cnt = 0
        for n, nu, de in samples:
            if lo <= n < hi:
                num += nu**2
                den += de**2
                cnt += 1
        if cnt == 0:
            raise ValueError(f"empty slope bucket [{lo}, {hi})")
        xs.append(math.log(math.sqrt(lo * hi)))
        ys.append(0.5 * float(mpmath.log(num / den)))
    return _ls_slope(xs, ys)


def _geom_grid(lo, hi, step=1.06, force_odd=False, force_even=False):
    out = []
    v = float(lo)
    while v <= hi:
        n = int(round(v))
        if force_odd and n % 2 == 0:
            n += 1
        if force_even and n % 2 == 1:
            n += 1
        out.append(n)
        v *= step
    return sorted(set(out))

# per-k fit windows: higher orders only reach their asymptotic slope at
# larger n, so their buckets sit deeper in the grid
_BUCKETS_LOW = [(50, 100), (100, 200), (200, 400), (400, 801)]
_BUCKETS_MID = [(201, 400), (401, 800), (801, 1601)]
_BUCKETS_HIGH = [(401, 800), (801, 1600), (1601, 3201)]
_BUCKETS_LAG_HIGH = [(200, 283), (283, 400), (400, 566), (566, 801)]


def charlier_order_slopes(x, kmax=6, prec=128):
    """Log-log slopes of |Phi_k| / |(n|x|)(n|x|-1)...(n|x|-n+1)| in n.

    Odd-n grid: at even n the products n*x hit integers for the rational
    test x and every low-order term vanishes identically.
    """
    with resolve_prec(prec).applied():
        x = to_mp(x)
        grid = _geom_grid(51, 3201, force_odd=True)
        samples = []
        for n in grid:
            raw = ch._phi_raw_sequence(x, n, kmax)
            nrm = abs(falling_factorial(n * abs(x), n))
            samples.append((n, [abs(v) for v in raw], nrm))
        out = {}
        for k in range(1, kmax + 1):
            if k <= 3:
                buckets = [(51, 101), (101, 201), (201, 401), (401, 802)]
            else:
                buckets = _BUCKETS_MID if k == 4 else _BUCKETS_HIGH
            out[k] = _bucket_slope([(n, nu[k], de) for n, nu, de in samples], buckets)
        return out


def laguerre_order_slopes(x, kmax=6, prec=128):
    """Slopes of (|Phi_k|+|Psi_k|)/(|Phi_0|+|Psi_0|) in n over [50, 800]."""
    with resolve_prec(prec).applied():
        x = to_mp(x)
        grid = _geom_grid(50, 800, step=1.05)
        samples = []
        for n in grid:
            Phi, Psi = lg._phi_psi_raw(x, n, kmax)
            den = abs(Phi[0]) + abs(Psi[0])
            samples.append((n, [abs(p) + abs(q) for p, q in zip(Phi, Psi)], den))
        out = {}
        for k in range(1, kmax + 1):
            buckets = _BUCKETS_LOW if k <= 4 else _BUCKETS_LAG_HIGH
            out[k] = _bucket_slope([(n, nu[k], de) for n, nu, de in samples], buckets)
        return out


def jacobi_order_slopes(x, kmax=6, prec=128):
    """Slopes of normalized Phi- and Psi-streams in n.

    At x = 0 the Phi-terms vanish identically at odd degree and the
    Psi-terms at even degree, so the two streams are measured on the
    parities where they are nonzero.
    """
    with resolve_prec(prec).applied():
        x = to_mp(x)
        even = _geom_grid(50, 3201, force_even=True)
        odd = _geom_grid(51, 3201, force_odd=True)
        combined = x != 0

        def gather(grid):
            res = []
            for n in grid:
                Phi, Psi = jc._cheb_raw(x, n, kmax)
                res.append((n, Phi, Psi))
            return res

        data_e = gather(even)
        data_o = data_e if combined else gather(odd)
        out_phi = {}
        out_psi = {}
        for k in range(1, kmax + 1):
            buckets = _BUCKETS_LOW if k <= 3 else (_BUCKETS_MID if k == 4 else _BUCKETS_HIGH)
            if combined:
                sam = [
                    (n, abs(Phi[k]) + abs(Psi[k]), abs(Phi[0]) + abs(Psi[0]))
                    for n, Phi, Psi in data_e
                ]
                out_phi[k] = _bucket_slope(sam, buckets)
                out_psi[k] = out_phi[k]
            else:
                out_phi[k] = _bucket_slope(
                    [(n, abs(Phi[k]), abs(Phi[0])) for n, Phi, Psi in data_e], buckets
                )
                out_psi[k] = _bucket_slope(
                    [(n, abs(Psi[k]), abs(Psi[0])) for n, Phi, Psi in data_o], buckets
                )
        return out_phi, out_psi


def suite_orders(prec=128):
    """Empirical asymptotic-order slopes vs the claimed -floor((k+1)/2)."""
    out = []
    for x in ("0.25", "0.5", "2"):
        slopes = charlier_order_slopes(mpf(x), prec=prec)
        for k, s in slopes.items():
            t = -((k + 1) // 2)
            out.append(
                _check(f"orders.charlier.x={x}.k={k}", abs(s - t) <= SLOPE_TOL, f"slope={s:.2f} target={t}")
            )
    for x in ("1.5", "3.5", "6"):
        slopes = laguerre_order_slopes(mpf(x), prec=prec)
        for k, s in slopes.items():
            t = -((k + 1) // 2)
            out.append(
                _check(f"orders.laguerre.x={x}.k={k}", abs(s - t) <= SLOPE_TOL, f"slope={s:.2f} target={t}")
            )
    for x in ("0", "0.5", "-0.5", "0.9", "-0.9"):
        sph, sps = jacobi_order_slopes(mpf(x), prec=prec)
        for k in sph:
            t = -((k + 1) // 2)
            out.append(
                _check(f"orders.jacobi.phi.x={x}.k={k}", abs(sph[k] - t) <= SLOPE_TOL, f"slope={sph[k]:.2f} target={t}")
            )
            out.append(
                _check(f"orders.jacobi.psi.x={x}.k={k}", abs(sps[k] - t) <= SLOPE_TOL, f"slope={sps[k]:.2f} target={t}")
            )
    return out


# ---------------------------------------------------------------------------
# oracle agreement (recurrence / direct-sum / quadrature)
# ---------------------------------------------------------------------------


def suite_oracles(prec=None):
    out = []
    pc = resolve_prec(prec)
    with pc.applied():
        # Charlier: recurrence vs terminating-sum form
        for x in (mpf("0.25"), mpf("0.5"), mpf(2), mpc("0.5", "0.2")):
            for n in (10, 100):
                raw = ch._phi_raw_sequence(x, n, 10)
                worst = max(
                    float(_rel(raw[k], ch._phi_terminating_sum(x, n, k))) for k in range(11)
                )
                out.append(
                    _check(f"oracles.charlier.rec_vs_sum.x={x}.n={n}", worst <= 1e-10, f"max rel {worst:.1e}")
                )
        # Charlier: quadrature vs recurrence (odd n keeps n*x off the
        # integers, where every low-order term vanishes identically)
        for n in (11, 101):
            p = CharlierParams(a=1, x=0.25, n=n)
            raw = ch._phi_raw_sequence(mpf("0.25"), n, 6)
            worst = max(
                float(_rel(ch.contour_phi_oracle(p, k, prec=mp.prec).value(), raw[k]))
                for k in range(7)
            )
            out.append(_check(f"oracles.charlier.quad.n={n}", worst <= 1e-9, f"max rel {worst:.1e}"))
        # Charlier: expansion (adaptive truncation) vs direct oracle, 3x3x3
        worst = 0.0
        for a in ("0.5", "1", "2"):
            for x in ("0.25", "0.75", "1.5"):
                for n in (5, 10, 20):
                    p = CharlierParams(a=mpf(a), x=mpf(x), n=n)
                    got = ch.charlier_expand(p, N=None, prec=mp.prec).value
                    ref = charlier_direct(mpf(a), n, n * mpf(x), prec=mp.prec)
                    worst = max(worst, float(_rel(got.value(), ref.value())))
        out.append(_check("oracles.charlier.expand_vs_direct", worst <= 1e-8, f"max rel {worst:.1e}"))

        # Laguerre: recurrence vs direct sums vs quadrature, k <= 6
        for x, n in ((mpf("1.5"), 12), (mpf("3.5"), 10), (mpf(6), 10), (mpf(8), 10)):
            p = LaguerreParams(alpha=1, x=x, n=n)
            Phi, Psi = lg._phi_psi_raw(x, n, 6)
            scale = abs(Phi[0]) + abs(Psi[0])
            worst = 0.0
            for k in range(7):
                dp, dq = lg.phi_psi_direct(p, k, prec=mp.prec)
                qp, qq = lg.contour_phi_psi_oracle(p, k, prec=mp.prec)
                worst = max(
                    worst,
                    float(_rel(Phi[k], dp.value(), scale)),
                    float(_rel(Psi[k], dq.value(), scale)),
                    float(_rel(Phi[k], qp.value(), scale)),
                    float(_rel(Psi[k], qq.value(), scale)),
                )
            out.append(_check(f"oracles.laguerre.triple.x={float(x)}.n={n}", worst <= 1e-9, f"max rel {worst:.1e}"))
        # Laguerre coefficients: recursion vs generic two-point vs explicit sum
        for alpha, x in ((mpf(1), mpf("3.5")), (mpf("2.5"), mpf("1.5")), (mpf(0), mpf(8))):
            rec = lg.ab_coeffs(alpha, x, 5, prec=mp.prec)
            tp = lg.ab_coeffs_direct(alpha, x, 5, prec=mp.prec)
            scale = max(abs(v) for v in rec.A + rec.B)
            worst = max(
                max(float(abs(a - b) / scale) for a, b in zip(rec.A, tp.A)),
                max(float(abs(a - b) / scale) for a, b in zip(rec.B, tp.B)),
            )
            sd = lg.saddles(x)
            for k in range(1, 6):
                ak = lg.a_k_series(alpha, x, k, prec=mp.prec)
                akp = lg.a_k_series(alpha, x, k, primed=True, prec=mp.prec)
                if 0 < x < 4:
                    # conjugate-saddle regime: the partner is the conjugate
                    worst = max(worst, float(abs(akp - mpmath.conj(ak)) / scale))
                A_k = -(ak * sd.w_plus + akp * sd.w_minus)
                B_k = ak + akp
                worst = max(
                    worst,
                    float(abs(mp.re(A_k) - rec.A[k]) / scale),
                    float(abs(mp.re(B_k) - rec.B[k]) / scale),
                )
            out.append(_check(f"oracles.laguerre.ab.alpha={float(alpha)}.x={float(x)}", worst <= 1e-10, f"max scaled {worst:.1e}"))
        # Laguerre closed-form seeds match the interpolation seeds
        worst = 0.0
        for alpha in (mpf(0), mpf(1), mpf("2.5")):
            for x in (mpf("1.5"), mpf("3.99"), mpf(4), mpf("4.01"), mpf(8)):
                a0c, b0c = lg.ab0_closed_form(alpha, x, prec=mp.prec)
                seeds = lg.ab_coeffs(alpha, x, 0, prec=mp.prec)
                worst = max(worst, float(_rel(a0c, seeds.A[0], 1)), float(_rel(b0c, seeds.B[0], 1)))
        out.append(_check("oracles.laguerre.ab0_closed_forms", worst <= 1e-30, f"max rel {worst:.1e}"))
        # Laguerre expansion vs direct oracle
        p = LaguerreParams(alpha=1, x=3.5, n=10)
        got = lg.laguerre_expand(p, 40, prec=mp.prec).value.value()
        ref = laguerre_direct(1, 10, 35, prec=mp.prec).value()
        out.append(_check("oracles.laguerre.expand_vs_direct", float(_rel(got, ref)) <= 1e-8, f"rel {float(_rel(got, ref)):.1e}"))

        # Jacobi: recurrence vs direct sums vs quadrature
        for x, n in ((mpf("0.3"), 12), (mpf("-0.5"), 10), (mpf("0.8"), 15)):
            p = JacobiParams(alpha=2, beta=3, x=float(x), n=n)
            Phi, Psi = jc._cheb_raw(x, n, 6)
            scale = abs(Phi[0]) + abs(Psi[0])
            worst = 0.0
            for k in range(7):
                dp, dq = jc.phi_psi_direct(p, k, prec=mp.prec)
                qp, qq = jc.contour_jacobi_oracle(p, k, prec=mp.prec)
                worst = max(
                    worst,
                    float(_rel(Phi[k], dp, scale)),
                    float(_rel(Psi[k], dq, scale)),
                    float(_rel(Phi[k], qp, scale)),
                    float(_rel(Psi[k], qq, scale)),
                )
            out.append(_check(f"oracles.jacobi.triple.x={float(x)}.n={n}", worst <= 1e-9, f"max rel {worst:.1e}"))
        # Jacobi coefficients: explicit stream vs two-point vs first-order recursion
        for alpha, beta, x in ((mpf("1.5"), mpf("0.5"), mpf("0.3")), (mpf(3), mpf(4), mpf("-0.7"))):
            lit = jc.jacobi_ab_coeffs(alpha, beta, x, 8, prec=mp.prec)
            tp = jc.jacobi_ab_coeffs_twopoint(alpha, beta, x, 8, prec=mp.prec)
            ode_A, ode_B = jc._ab_ode_stream(alpha, beta, x, 8, mpf(1) / 2)
            scale = max(abs(v) for v in lit.A + lit.B)
            worst = max(
                max(float(abs(a - b) / scale) for a, b in zip(lit.A, tp.A)),
                max(float(abs(a - b) / scale) for a, b in zip(lit.B, tp.B)),
                max(float(abs(a - b) / scale) for a, b in zip(lit.A, ode_A)),
                max(float(abs(a - b) / scale) for a, b in zip(lit.B, ode_B)),
            )
            out.append(_check(f"oracles.jacobi.ab.x={float(x)}", worst <= 1e-10, f"max scaled {worst:.1e}"))
        # Jacobi full Cauchy integral equals the polynomial
        p = JacobiParams(alpha=3, beta=4, x=0.3, n=12)
        got = jc.contour_full_oracle(p, prec=mp.prec)
        ref = jacobi_direct(3, 4, 12, mpf("0.3"), prec=mp.prec)
        out.append(_check("oracles.jacobi.full_integral", float(_rel(got, ref)) <= 1e-12, f"rel {float(_rel(got, ref)):.1e}"))
        # Jacobi expansion vs direct oracle (both bases)
        p = JacobiParams(alpha=3, beta=4, x=0.3, n=12)
        ref = jacobi_direct(3, 4, 12, mpf("0.3"), prec=mp.prec)
        for basis in (jc.CHEBYSHEV_BASIS, jc.LEGENDRE_BASIS):
            got = jc.jacobi_expand(p, 60, basis=basis, stream="quadrature", prec=mp.prec).value
            out.append(
                _check(f"oracles.jacobi.expand_vs_direct.{basis}", float(abs(got - ref)) <= 1e-10, f"abs {float(abs(got - ref)):.1e}")
            )
    return out


# ---------------------------------------------------------------------------
# convergence geometry (Cassini ovals, divergence witnesses)
# ---------------------------------------------------------------------------


def suite_cassini(prec=None):
    out = []
    pc = resolve_prec(prec)
    with pc.applied():
        # Laguerre: radius equals x; origin inside iff x > 1
        worst = 0.0
        for x in (mpf("0.5"), mpf("1.5"), mpf("3.5"), mpf(6), mpf(8)):
            sd = lg.saddles(x)
            oval = cassini_region(sd.w_plus, sd.w_minus, [1], prec=mp.prec)
            worst = max(worst, float(abs(oval.r - x)))
        out.append(_check("cassini.laguerre.radius", worst <= 1e-12, f"max |r - x| {worst:.1e}"))
        inside_bad = lg.saddles(mpf("0.5"))
        inside_good = lg.saddles(mpf("1.5"))
        oval_bad = cassini_region(inside_bad.w_plus, inside_bad.w_minus, [1], prec=mp.prec)
        oval_good = cassini_region(inside_good.w_plus, inside_good.w_minus, [1], prec=mp.prec)
        out.append(
            _check(
                "cassini.laguerre.origin_membership",
                (not oval_bad.contains(0)) and oval_good.contains(0),
                "origin inside iff x > 1",
            )
        )
        # Jacobi: radius equals 2(1 - |x|) from the two branch points
        worst = 0.0
        for x in (mpf(0), mpf("0.3"), mpf("-0.3"), mpf("0.8"), mpf("-0.8")):
            sd = jc.jacobi_saddles(x)
            oval = cassini_region(sd.w_plus, sd.w_minus, [-1 - x, 1 - x], prec=mp.prec)
            worst = max(worst, float(abs(oval.r - 2 * (1 - abs(x)))))
        out.append(_check("cassini.jacobi.radius", worst <= 1e-12, f"max err {worst:.1e}"))

        # Laguerre divergence witness at x = 0.5 (terms grow)
        p = LaguerreParams(alpha=1, x=0.5, n=10)
        ab = lg.ab_coeffs(1, mpf("0.5"), 40, prec=mp.prec)
        Phi, Psi = lg.contour_phi_psi_stream(p, 40, prec=mp.prec)
        terms = [abs(ab.A[k] * Phi[k] + ab.B[k] * Psi[k]) for k in range(41)]
        growth = float(max(terms[30:]) / max(min(terms[3:16]), mpf("1e-300")))
        res = lg.laguerre_expand(p, 10, prec=mp.prec)
        out.append(
            _check(
                "cassini.laguerre.divergence_witness.x=0.5",
                growth > 1e6 and lg.OUTSIDE_CONVERGENCE_FLAG in res.flags,
                f"late/early term growth {growth:.1e}; flagged",
            )
        )
        # Laguerre convergence inside the region
        for x, n, K in ((mpf("1.5"), 10, 160), (mpf("1.5"), 30, 240), (mpf("3.5"), 10, 80), (mpf(6), 30, 80)):
            for alpha in (mpf(0), mpf(1), mpf("2.5")):
                p = LaguerreParams(alpha=alpha, x=x, n=n)
                ab = lg.ab_coeffs(alpha, x, K, prec=mp.prec)
                Phi, Psi = lg.contour_phi_psi_stream(p, K, prec=mp.prec)
                exact = laguerre_direct(alpha, n, n * x, prec=mp.prec).value()
                s = mpf(0)
                errs = []
                for k in range(K + 1):
                    s += ab.A[k] * Phi[k] + ab.B[k] * Psi[k]
                    errs.append(abs((s - exact) / exact))
                tail_ok = errs[-1] <= 1e-8 and errs[-1] < errs[K // 2]
                out.append(
                    _check(
                        f"cassini.laguerre.converges.x={float(x)}.alpha={float(alpha)}.n={n}",
                        tail_ok,
                        f"rel err {float(errs[-1]):.1e} at K={K}",
                    )
                )
        # Jacobi convergence across the interval
        for x in ("-0.9", "-0.5", "0", "0.5", "0.9"):
            xv = mpf(x)
            K = 460 if abs(xv) > 0.6 else 150
            p = JacobiParams(alpha=3, beta=4, x=float(xv), n=10)
            got = jc.jacobi_expand(p, K, stream="quadrature", prec=mp.prec).value
            ref = jacobi_direct(3, 4, 10, xv, prec=mp.prec)
            out.append(
                _check(f"cassini.jacobi.converges.x={x}", float(abs(got - ref)) <= 1e-8, f"abs err {float(abs(got - ref)):.1e} at K={K}")
            )
    return out


# ---------------------------------------------------------------------------
# section-6 expansions
# ---------------------------------------------------------------------------


def suite_section6(prec=None):
    out = []
    pc = resolve_prec(prec)
    with pc.applied():
        half = mpf(1) / 2
        # closed forms at nu = 1/2
        z = mpf(1)
        i_half = bk.besseli_expand(bk.BesselParams(nu=0.5, z=1), 40, prec=mp.prec).value
        i_ref = mpmath.sqrt(2 / (mpmath.pi * z)) * mpmath.sinh(z)
        out.append(_check("section6.besseli.nu_half_closed_form", float(abs(i_half - i_ref)) <= 1e-10, f"abs {float(abs(i_half - i_ref)):.1e}"))
        k_half = bk.besselk_expand(0.5, 1, 10, prec=mp.prec).value
        k_ref = mpmath.sqrt(mpmath.pi / (2 * z)) * mpmath.exp(-z)
        out.append(_check("section6.besselk.nu_half_closed_form", float(abs(k_half - k_ref)) <= 1e-10, f"abs {float(abs(k_half - k_ref)):.1e}"))

        # I-expansion term-decay slope ~ -(nu + 3/2)
        res = bk.besseli_expand(bk.BesselParams(nu=1, z=2), 400, prec=mp.prec)
        t100 = abs(res.partial_sums[100] - res.partial_sums[99])
        t400 = abs(res.partial_sums[400] - res.partial_sums[399])
        slope = float(mpmath.log(t400 / t100) / mpmath.log(4))
        out.append(_check("section6.besseli.term_decay_slope", abs(slope + 2.5) <= SLOPE_TOL, f"slope {slope:.2f} target -2.5"))
        # successive-term ratio scales like 1/z (leading ratios small, and
        # doubling z halves each early ratio)
        def _term_ratios(z_, upto):
            r_ = bk.besseli_expand(bk.BesselParams(nu=1, z=z_), upto, prec=mp.prec)
            t_ = [r_.partial_sums[k] - r_.partial_sums[k - 1] for k in range(1, upto + 1)]
            return [abs(t_[i] / t_[i - 1]) for i in range(1, len(t_))]

        r20 = _term_ratios(20, 10)
        r40 = _term_ratios(40, 10)
        halving = [float(b / a) for a, b in zip(r20, r40)]
        out.append(
            _check(
                "section6.besseli.large_z_ratio",
                max(float(v) for v in r20[:4]) < 0.1
                and all(abs(h - 0.5) < 0.15 for h in halving[:8]),
                f"first ratios {[f'{float(v):.3f}' for v in r20[:4]]}, z-doubling factors ~0.5",
            )
        )

        # I-expansion vs its series oracle: strict where the algebraic
        # tail is affordable, self-consistent (estimate-bounded) elsewhere
        p = bk.BesselParams(nu=2.3, z=5)
        got = bk.besseli_expand(p, 1200, prec=mp.prec)
        ref = bk.besseli_series(2.3, 5, prec=mp.prec)
        out.append(_check("section6.besseli.strict.nu=2.3", float(_rel(got.value, ref)) <= 1e-9, f"rel {float(_rel(got.value, ref)):.1e}"))
        for nu in (mpf(0), half, mpf(1), mpf("2.3")):
            worst = 0.0
            for z in (mpf("0.5"), mpf(1), mpf(5), mpf(10)):
                got = bk.besseli_expand(bk.BesselParams(nu=float(nu), z=float(z)), 300, prec=mp.prec)
                ref = bk.besseli_series(nu, z, prec=mp.prec)
                err = abs(got.value - ref)
                budget = max(got.error_estimate * 300, abs(ref) * mpf("1e-10"))
                worst = max(worst, float(err / budget))
            out.append(_check(f"section6.besseli.consistent.nu={float(nu)}", worst <= 1.0, f"err/budget {worst:.2f}"))

        # K-expansion vs quadrature oracle over the grid
        worst = 0.0
        for nu in (mpf(0), half, mpf(1), mpf("2.3")):
            for z in (mpf("0.5"), mpf(1), mpf(5), mpf(10)):
                N = 170 if z < 1 else (110 if z < 5 else 70)
                got = bk.besselk_expand(nu, z, N, prec=mp.prec).value
                ref = bk.besselk_quadrature(nu, z, prec=mp.prec)
                worst = max(worst, float(_rel(got, ref)))
        out.append(_check("section6.besselk.vs_quadrature", worst <= 1e-10, f"max rel {worst:.1e}"))

        # incomplete gamma: asymptotic ratio and up/down recursion closure
        nu, zz, kk = mpf(1), mpf(1), 200
        g = bk.lower_incomplete_gamma(nu + kk + half, 2 * zz, prec=mp.prec)
        asym = mpmath.exp(-2 * zz) * (2 * zz) ** (nu + kk + half) / (nu + kk + half)
        out.append(_check("section6.gamma.asymptotic_ratio", abs(float(g / asym) - 1) < 0.05, f"ratio-1 {float(g / asym) - 1:.1e}"))
        a0, xx = mpf("1.3"), mpf(2)
        g0 = bk.lower_incomplete_gamma(a0, xx, prec=mp.prec)
        up = a0 * g0 - xx**a0 * mpmath.exp(-xx)  # gamma(a0+1, x)
        back = (up + xx**a0 * mpmath.exp(-xx)) / a0
        out.append(_check("section6.gamma.updown_closure", float(_rel(back, g0)) <= mpf(2) ** (-mp.prec + 3), f"rel {float(_rel(back, g0)):.1e}"))

        # U-function growth: log(k! U_k) fits -2 sqrt(2kz) + c log k + d
        us = bk.u_sequence(200, half - 0, 2, prec=mp.prec)  # nu = 0, z = 1
        ks = list(range(50, 201, 10))
        ys = [float(mpmath.loggamma(k + 1) + mpmath.log(us[k]) + 2 * mpmath.sqrt(2 * k)) for k in ks]
        xs = [math.log(k) for k in ks]
        c = _ls_slope(xs, ys)
        d = (sum(ys) - c * sum(xs)) / len(ys)
        resid = max(abs(y - (c * xv + d)) for y, xv in zip(ys, xs))
        spread = max(ys) - min(ys)
        out.append(_check("section6.ufunction.growth_fit", resid <= 0.1 * max(spread, 1.0), f"c={c:.2f} resid={resid:.3f}"))

        # Tricomi coefficients and the 1F1 expansion
        co = bk.tricomi_coeffs(mpf("2.5"), mpf("1.5"), 30, prec=mp.prec)
        out.append(_check("section6.tricomi.seed_coeffs", co.terms[0] == 1 and co.terms[1] == 0, "A0=1, A1=0"))
        zt = mpf("0.3")
        series = sum(co.terms[n] * zt**n for n in range(31))
        direct = bk.tricomi_generating_value(mpf("2.5"), mpf("1.5"), zt, prec=mp.prec)
        out.append(_check("section6.tricomi.generating_residual", float(_rel(series, direct)) <= 1e-12, f"rel {float(_rel(series, direct)):.1e}"))
        worst = 0.0
        for a, c_, z_ in ((1, 3, 1), (2, 4.5, 2.5), (-20, 1, 0.5), (1.5, 0.5, -2)):
            got = bk.kummer_expand(bk.KummerParams(a=a, c=c_, z=z_), 48, prec=mp.prec).value
            ref = bk.kummer_series(a, c_, z_, prec=mp.prec)
            worst = max(worst, float(_rel(got, ref)))
        out.append(_check("section6.kummer.spot_points", worst <= 1e-10, f"max rel {worst:.1e}"))
        got = bk.kummer_expand(bk.KummerParams(a=1, c=3, z=mpc("0.5", "0.5")), 48, prec=mp.prec).value
        ref = bk.kummer_series(1, 3, mpc("0.5", "0.5"), prec=mp.prec)
        out.append(_check("section6.kummer.complex_spot", float(_rel(got, ref)) <= 1e-10, f"rel {float(_rel(got, ref)):.1e}"))
        got3 = bk.kummer_expand(bk.KummerParams(a=-20, c=1, z=0.5), 3, prec=mp.prec).value
        ref3 = bk.kummer_series(-20, 1, mpf("0.5"), prec=mp.prec)
        out.append(_check("section6.kummer.large_kappa_N3", float(_rel(got3, ref3)) <= 1e-4, f"rel {float(_rel(got3, ref3)):.1e}"))
    return out


# ---------------------------------------------------------------------------
# reference tables
# ---------------------------------------------------------------------------


def charlier_zero_errors(prec=None):
    zeros = ch.charlier_zeros(1, 10, prec=prec)
    return [float(abs(z - mpf(ref))) for z, ref in zip(zeros, TABLE_CHARLIER_ZEROS_N10_A1)]


def charlier_table_ratio_errors(n, prec=None):
    """|computed S_N/exact - printed S_N/exact| for N = 0..5."""
    pc = resolve_prec(prec)
    with pc.applied():
        row = TABLE_CHARLIER_CONV[n]
        p = CharlierParams(a=1, x=0.25, n=n)
        res = ch.charlier_expand(p, N=5, prec=mp.prec)
        exact = charlier_direct(1, n, n * mpf("0.25"), prec=mp.prec)
        errs = []
        for col in range(6):
            comp = (res.partial_sums[col] / exact).value()
            printed = mpf(row[col + 1]) / mpf(row[0])
            errs.append(float(abs(comp - printed)))
        return errs


def laguerre_table_ratio_errors(n, prec=None):
    pc = resolve_prec(prec)
    with pc.applied():
        row = TABLE_LAGUERRE_CONV[n]
        p = LaguerreParams(alpha=1, x=3.5, n=n)
        res = lg.laguerre_expand(p, 5, prec=mp.prec)
        exact = laguerre_direct(1, n, n * mpf("3.5"), prec=mp.prec)
        errs = []
        for col in range(6):
            comp = (res.partial_sums[col] / exact).value()
            printed = mpf(row[col + 1]) / mpf(row[0])
            errs.append(float(abs(comp - printed)))
        return errs


def jacobi_table_abs_errors(n, basis=jc.LEGENDRE_BASIS, prec=None):
    """(exact_err, [S_0..S_5 errors]) against the printed absolute values."""
    pc = resolve_prec(prec)
    with pc.applied():
        row = TABLE_JACOBI_CONV[n]
        p = JacobiParams(alpha=1.5, beta=0.5, x=0.0, n=n)
        res = jc.jacobi_expand(p, 5, basis=basis, prec=mp.prec)
        exact = jacobi_direct(mpf("1.5"), mpf("0.5"), n, 0, prec=mp.prec)
        exact_err = float(abs(exact - mpf(row[0])))
        errs = [float(abs(res.partial_sums[c] - mpf(row[c + 1]))) for c in range(6)]
        return exact_err, errs


def suite_tables(prec=None):
    out = []
    errs = charlier_zero_errors(prec=prec)
    out.append(_check("tables.charlier_zeros", max(errs) <= 1e-8, f"max abs {max(errs):.1e}"))
    for n in (30, 50, 90):
        e = charlier_table_ratio_errors(n, prec=prec)
        out.append(_check(f"tables.charlier_conv.n={n}", max(e) <= 1e-4, f"max ratio err {max(e):.1e}"))
    e10 = charlier_table_ratio_errors(10, prec=prec)
    out.append(
        _note(
            "tables.charlier_conv.n=10",
            "printed row is internally inconsistent (ratios oscillate around 1 while the "
            f"verified partial sums approach it monotonically); max ratio err {max(e10):.1e}",
        )
    )
    for n in (10, 30, 50, 90):
        e = laguerre_table_ratio_errors(n, prec=prec)
        out.append(_check(f"tables.laguerre_conv.n={n}", max(e) <= 1e-4, f"max ratio err {max(e):.1e}"))
    for n in (10, 30, 50, 90):
        exact_err, e = jacobi_table_abs_errors(n, prec=prec)
        out.append(_check(f"tables.jacobi_conv.exact.n={n}", exact_err <= 1e-6, f"abs {exact_err:.1e}"))
        out.append(_check(f"tables.jacobi_conv.S0.n={n}", e[0] <= 1e-6, f"abs {e[0]:.1e}"))
        out.append(
            _note(
                f"tables.jacobi_conv.S1toS5.n={n}",
                "printed columns N>=1 match no self-consistent coefficient/term pairing "
                "(at x=0 the half-shifted expansion terminates with S_1 = exact = "
                f"{TABLE_JACOBI_CONV[n][0]}, contradicting the printed S_1 = S_0); "
                f"unshifted-basis S_1..S_5 deviations: {['%.1e' % v for v in e[1:]]}",
            )
        )
    # positive replacement evidence: the half-shifted expansion terminates
    pc = resolve_prec(prec)
    with pc.applied():
        p = JacobiParams(alpha=1.5, beta=0.5, x=0.0, n=10)
        res = jc.jacobi_expand(p, 5, basis=jc.CHEBYSHEV_BASIS, prec=mp.prec)
        exact = jacobi_direct(mpf("1.5"), mpf("0.5"), 10, 0, prec=mp.prec)
        term_err = max(float(abs(s - exact)) for s in res.partial_sums[1:])
        out.append(_check("tables.jacobi_conv.chebyshev_terminates", term_err <= 1e-9, f"S_1..S_5 vs exact {term_err:.1e}"))
    return out


SUITES = {
    "orders": suite_orders,
    "oracles": suite_oracles,
    "cassini": suite_cassini,
    "section6": suite_section6,
    "tables": suite_tables,
}


def run_suite(name, prec=None):
    """Run one suite (or 'all'); returns (results, all_passed)."""
    if name == "all":
        results = []
        for key in ("orders", "oracles", "cassini", "section6", "tables"):
            results.extend(SUITES[key](prec=prec))
    elif name in SUITES:
        results = SUITES[name](prec=prec)
    else:
        raise KeyError(f"unknown suite {name!r}")
    return results, all(r.passed for r in results)
