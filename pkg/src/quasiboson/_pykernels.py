"""Pure-Python numerical kernels.

This module is the reference implementation of the hot loops and the
fallback used when the compiled ``_kernels`` extension is unavailable.
``_kernels.pyx`` mirrors it operation for operation, so both backends
return bit-identical floats; keep the two files in lockstep.
"""
from math import fabs, log, sin, sqrt

# 10-point Gauss / 21-point Kronrod abscissae on [0, 1], descending.
# XGK[1::2] are the Gauss nodes. Regenerate with tools/gen_gk21.py.
XGK = (
    0.99565716302580808074,
    0.97390652851717172008,
    0.93015749135570822600,
    0.86506336668898451073,
    0.78081772658641689706,
    0.67940956829902440623,
    0.56275713466860468334,
    0.43339539412924719080,
    0.29439286270146019813,
    0.14887433898163121088,
    0.0,
)
WGK = (
    0.011694638867371874278,
    0.032558162307964727479,
    0.054755896574351996031,
    0.075039674810919952767,
    0.093125454583697605535,
    0.10938715880229764190,
    0.12349197626206585108,
    0.13470921731147332593,
    0.14277593857706008080,
    0.14773910490133849137,
    0.14944555400291690566,
)
WG = (
    0.066671344308688137594,
    0.14945134915058059315,
    0.21908636251598204400,
    0.26926671930999635509,
    0.29552422471475287017,
)

EPMACH = 2.220446049250313e-16
UFLOW = 2.2250738585072014e-308

# integrand codes understood by quad_named
HYD_ALPHA = 0
HYD_X_ENTROPY = 1
HYD_X_WEIGHT = 2
LEGENDRE_ENTROPY = 3
LEGENDRE_NORM = 4

# quad status codes
OK = 0
LIMIT_REACHED = 1
INTERVAL_TOO_SMALL = 2

_RESCALE = 1e250
_LOG_RESCALE = log(1e250)


def ipow(x, k):
    r = 1.0
    for _ in range(k):
        r *= x
    return r


def gegenbauer(lam, k, x):
    if k == 0:
        return 1.0
    c0 = 1.0
    c1 = 2.0 * lam * x
    for j in range(2, k + 1):
        c2 = (2.0 * x * (j + lam - 1.0) * c1 - (j + 2.0 * lam - 2.0) * c0) / j
        c0 = c1
        c1 = c2
    return c1


def assoc_legendre(l, m, x):
    pmm = 1.0
    if m > 0:
        somx2 = sqrt((1.0 - x) * (1.0 + x))
        fact = 1.0
        for _ in range(m):
            pmm = -pmm * fact * somx2
            fact += 2.0
    if l == m:
        return pmm
    pmmp1 = x * (2.0 * m + 1.0) * pmm
    if l == m + 1:
        return pmmp1
    pll = 0.0
    for ll in range(m + 2, l + 1):
        pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m)
        pmm = pmmp1
        pmmp1 = pll
    return pll


def log_bessel_i(nu, z):
    """ln I_nu(z) for integer nu >= 0 and z > 0 by the rescaled power series."""
    log_t0 = nu * log(0.5 * z)
    for k in range(2, nu + 1):
        log_t0 -= log(k)
    q = 0.25 * z * z
    term = 1.0
    total = 1.0
    shift = 0.0
    k = 0
    while True:
        k += 1
        term *= q / (k * (k + nu))
        total += term
        if term < 1e-17 * total:
            break
        if total > _RESCALE:
            total /= _RESCALE
            term /= _RESCALE
            shift += _LOG_RESCALE
    return log_t0 + shift + log(total)


def hyd_alpha(alpha, nu):
    h = sin(0.5 * alpha)
    omc = 2.0 * h * h
    s = sin(nu * alpha)
    if s == 0.0 or omc == 0.0:
        return 0.0
    sa = sin(alpha)
    return omc * s * s * (4.0 * log(omc) + 2.0 * log(fabs(s)) - 2.0 * log(fabs(sa)))


def hyd_x_weight(x, n, l):
    c = gegenbauer(l + 1.0, n - l - 1, x)
    omx = 1.0 - x
    opx = 1.0 + x
    return sqrt(omx * opx) * ipow(opx, l) * ipow(omx, l + 1) * c * c


def hyd_x_entropy(x, n, l):
    c = gegenbauer(l + 1.0, n - l - 1, x)
    if c == 0.0:
        return 0.0
    omx = 1.0 - x
    opx = 1.0 + x
    if omx <= 0.0 or opx <= 0.0:
        return 0.0
    w = sqrt(omx * opx) * ipow(opx, l) * ipow(omx, l + 1) * c * c
    lng = l * log(omx * opx) + 4.0 * log(omx) + 2.0 * log(fabs(c))
    return w * lng


def legendre_entropy(t, l, m):
    p = assoc_legendre(l, m, t)
    if p == 0.0:
        return 0.0
    p2 = p * p
    return p2 * log(p2)


def legendre_norm(t, l, m):
    p = assoc_legendre(l, m, t)
    return p * p


def _named(code, p0, p1):
    if code == HYD_ALPHA:
        return lambda x: hyd_alpha(x, p0)
    if code == HYD_X_ENTROPY:
        return lambda x: hyd_x_entropy(x, int(p0), int(p1))
    if code == HYD_X_WEIGHT:
        return lambda x: hyd_x_weight(x, int(p0), int(p1))
    if code == LEGENDRE_ENTROPY:
        return lambda x: legendre_entropy(x, int(p0), int(p1))
    if code == LEGENDRE_NORM:
        return lambda x: legendre_norm(x, int(p0), int(p1))
    raise ValueError(f"unknown integrand code {code}")


def gk21(f, a, b):
    """One 21-point Kronrod panel: (result, abserr), QUADPACK error model."""
    centr = 0.5 * (a + b)
    hlgth = 0.5 * (b - a)
    dhlgth = fabs(hlgth)
    fv1 = [0.0] * 10
    fv2 = [0.0] * 10
    resg = 0.0
    fc = f(centr)
    resk = WGK[10] * fc
    resabs = fabs(resk)
    for j in range(5):
        jtw = 2 * j + 1
        absc = hlgth * XGK[jtw]
        f1 = f(centr - absc)
        f2 = f(centr + absc)
        fv1[jtw] = f1
        fv2[jtw] = f2
        fsum = f1 + f2
        resg += WG[j] * fsum
        resk += WGK[jtw] * fsum
        resabs += WGK[jtw] * (fabs(f1) + fabs(f2))
    for j in range(5):
        jtwm1 = 2 * j
        absc = hlgth * XGK[jtwm1]
        f1 = f(centr - absc)
        f2 = f(centr + absc)
        fv1[jtwm1] = f1
        fv2[jtwm1] = f2
        fsum = f1 + f2
        resk += WGK[jtwm1] * fsum
        resabs += WGK[jtwm1] * (fabs(f1) + fabs(f2))
    reskh = resk * 0.5
    resasc = WGK[10] * fabs(fc - reskh)
    for j in range(10):
        resasc += WGK[j] * (fabs(fv1[j] - reskh) + fabs(fv2[j] - reskh))
    result = resk * hlgth
    resabs *= dhlgth
    resasc *= dhlgth
    abserr = fabs((resk - resg) * hlgth)
    if resasc != 0.0 and abserr != 0.0:
        ratio = 200.0 * abserr / resasc
        abserr = resasc * min(1.0, ratio * sqrt(ratio))
    if resabs > UFLOW / (50.0 * EPMACH):
        abserr = max(EPMACH * 50.0 * resabs, abserr)
    return result, abserr


def adaptive_gk21(f, a, b, abs_tol, rel_tol, limit):
    """Globally adaptive bisection on 21-point Kronrod panels.

    Returns (value, error_estimate, status, intervals_used).
    """
    lo = [a]
    hi = [b]
    res = [0.0]
    err = [0.0]
    res[0], err[0] = gk21(f, a, b)
    while True:
        total = 0.0
        errsum = 0.0
        for i in range(len(res)):
            total += res[i]
            errsum += err[i]
        if errsum <= max(abs_tol, rel_tol * fabs(total)):
            return total, errsum, OK, len(res)
        if len(res) >= limit:
            return total, errsum, LIMIT_REACHED, len(res)
        worst = 0
        for i in range(1, len(err)):
            if err[i] > err[worst]:
                worst = i
        left = lo[worst]
        right = hi[worst]
        mid = 0.5 * (left + right)
        if not (left < mid < right):
            return total, errsum, INTERVAL_TOO_SMALL, len(res)
        r1, e1 = gk21(f, left, mid)
        r2, e2 = gk21(f, mid, right)
        hi[worst] = mid
        res[worst] = r1
        err[worst] = e1
        lo.append(mid)
        hi.append(right)
        res.append(r2)
        err.append(e2)


def quad_named(code, p0, p1, a, b, abs_tol, rel_tol, limit):
    """Adaptive quadrature of one of the built-in integrands."""
    return adaptive_gk21(_named(code, p0, p1), a, b, abs_tol, rel_tol, limit)
