# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels.

Operation-for-operation twin of ``_pykernels.py``; the two must stay
bit-identical (tests/test_backends.py enforces it).
"""
from libc.math cimport fabs, log, sin, sqrt
from libc.stdlib cimport malloc, realloc, free

from quasiboson._pykernels import XGK as _XGK, WGK as _WGK, WG as _WG
from quasiboson._pykernels import (
    HYD_ALPHA, HYD_X_ENTROPY, HYD_X_WEIGHT, LEGENDRE_ENTROPY, LEGENDRE_NORM,
    OK, LIMIT_REACHED, INTERVAL_TOO_SMALL, gk21, adaptive_gk21,
)

XGK = _XGK
WGK = _WGK
WG = _WG

cdef double[11] xgk
cdef double[11] wgk
cdef double[5] wg
cdef int _i
for _i in range(11):
    xgk[_i] = _XGK[_i]
    wgk[_i] = _WGK[_i]
for _i in range(5):
    wg[_i] = _WG[_i]

cdef double EPMACH = 2.220446049250313e-16
cdef double UFLOW = 2.2250738585072014e-308
cdef double _RESCALE = 1e250
cdef double _LOG_RESCALE = log(1e250)


cdef inline double c_ipow(double x, int k) nogil:
    cdef double r = 1.0
    cdef int i
    for i in range(k):
        r *= x
    return r


cdef double c_gegenbauer(double lam, int k, double x) nogil:
    cdef double c0, c1, c2
    cdef int j
    if k == 0:
        return 1.0
    c0 = 1.0
    c1 = 2.0 * lam * x
    for j in range(2, k + 1):
        c2 = (2.0 * x * (j + lam - 1.0) * c1 - (j + 2.0 * lam - 2.0) * c0) / j
        c0 = c1
        c1 = c2
    return c1


cdef double c_assoc_legendre(int l, int m, double x) nogil:
    cdef double pmm = 1.0, somx2, fact, pmmp1, pll = 0.0
    cdef int i, ll
    if m > 0:
        somx2 = sqrt((1.0 - x) * (1.0 + x))
        fact = 1.0
        for i in range(m):
            pmm = -pmm * fact * somx2
            fact += 2.0
    if l == m:
        return pmm
    pmmp1 = x * (2.0 * m + 1.0) * pmm
    if l == m + 1:
        return pmmp1
    for ll in range(m + 2, l + 1):
        pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m)
        pmm = pmmp1
        pmmp1 = pll
    return pll


cdef double c_log_bessel_i(int nu, double z) nogil:
    cdef double log_t0 = nu * log(0.5 * z)
    cdef double q, term, total, shift
    cdef int k
    for k in range(2, nu + 1):
        log_t0 -= log(<double>k)
    q = 0.25 * z * z
    term = 1.0
    total = 1.0
    shift = 0.0
    k = 0
    while True:
        k += 1
        term *= q / (<double>k * (k + nu))
        total += term
        if term < 1e-17 * total:
            break
        if total > _RESCALE:
            total /= _RESCALE
            term /= _RESCALE
            shift += _LOG_RESCALE
    return log_t0 + shift + log(total)


cdef double c_hyd_alpha(double alpha, double nu) nogil:
    cdef double h = sin(0.5 * alpha)
    cdef double omc = 2.0 * h * h
    cdef double s = sin(nu * alpha)
    cdef double sa
    if s == 0.0 or omc == 0.0:
        return 0.0
    sa = sin(alpha)
    return omc * s * s * (4.0 * log(omc) + 2.0 * log(fabs(s)) - 2.0 * log(fabs(sa)))


cdef double c_hyd_x_weight(double x, int n, int l) nogil:
    cdef double c = c_gegenbauer(l + 1.0, n - l - 1, x)
    cdef double omx = 1.0 - x
    cdef double opx = 1.0 + x
    return sqrt(omx * opx) * c_ipow(opx, l) * c_ipow(omx, l + 1) * c * c


cdef double c_hyd_x_entropy(double x, int n, int l) nogil:
    cdef double c = c_gegenbauer(l + 1.0, n - l - 1, x)
    cdef double omx, opx, w, lng
    if c == 0.0:
        return 0.0
    omx = 1.0 - x
    opx = 1.0 + x
    if omx <= 0.0 or opx <= 0.0:
        return 0.0
    w = sqrt(omx * opx) * c_ipow(opx, l) * c_ipow(omx, l + 1) * c * c
    lng = l * log(omx * opx) + 4.0 * log(omx) + 2.0 * log(fabs(c))
    return w * lng


cdef double c_legendre_entropy(double t, int l, int m) nogil:
    cdef double p = c_assoc_legendre(l, m, t)
    cdef double p2
    if p == 0.0:
        return 0.0
    p2 = p * p
    return p2 * log(p2)


cdef double c_legendre_norm(double t, int l, int m) nogil:
    cdef double p = c_assoc_legendre(l, m, t)
    return p * p


cdef double c_eval(int code, double x, double p0, double p1) nogil:
    if code == 0:
        return c_hyd_alpha(x, p0)
    elif code == 1:
        return c_hyd_x_entropy(x, <int>p0, <int>p1)
    elif code == 2:
        return c_hyd_x_weight(x, <int>p0, <int>p1)
    elif code == 3:
        return c_legendre_entropy(x, <int>p0, <int>p1)
    else:
        return c_legendre_norm(x, <int>p0, <int>p1)


cdef void c_gk21(int code, double p0, double p1, double a, double b,
                 double* result, double* abserr) nogil:
    cdef double centr = 0.5 * (a + b)
    cdef double hlgth = 0.5 * (b - a)
    cdef double dhlgth = fabs(hlgth)
    cdef double fv1[10]
    cdef double fv2[10]
    cdef double resg = 0.0, fc, resk, resabs, absc, f1, f2, fsum
    cdef double reskh, resasc, err, ratio
    cdef int j, jtw, jtwm1
    fc = c_eval(code, centr, p0, p1)
    resk = wgk[10] * fc
    resabs = fabs(resk)
    for j in range(5):
        jtw = 2 * j + 1
        absc = hlgth * xgk[jtw]
        f1 = c_eval(code, centr - absc, p0, p1)
        f2 = c_eval(code, centr + absc, p0, p1)
        fv1[jtw] = f1
        fv2[jtw] = f2
        fsum = f1 + f2
        resg += wg[j] * fsum
        resk += wgk[jtw] * fsum
        resabs += wgk[jtw] * (fabs(f1) + fabs(f2))
    for j in range(5):
        jtwm1 = 2 * j
        absc = hlgth * xgk[jtwm1]
        f1 = c_eval(code, centr - absc, p0, p1)
        f2 = c_eval(code, centr + absc, p0, p1)
        fv1[jtwm1] = f1
        fv2[jtwm1] = f2
        fsum = f1 + f2
        resk += wgk[jtwm1] * fsum
        resabs += wgk[jtwm1] * (fabs(f1) + fabs(f2))
    reskh = resk * 0.5
    resasc = wgk[10] * fabs(fc - reskh)
    for j in range(10):
        resasc += wgk[j] * (fabs(fv1[j] - reskh) + fabs(fv2[j] - reskh))
    result[0] = resk * hlgth
    resabs *= dhlgth
    resasc *= dhlgth
    err = fabs((resk - resg) * hlgth)
    if resasc != 0.0 and err != 0.0:
        ratio = 200.0 * err / resasc
        ratio = ratio * sqrt(ratio)
        if ratio > 1.0:
            ratio = 1.0
        err = resasc * ratio
    if resabs > UFLOW / (50.0 * EPMACH):
        if EPMACH * 50.0 * resabs > err:
            err = EPMACH * 50.0 * resabs
    abserr[0] = err


cpdef double gegenbauer(double lam, int k, double x):
    return c_gegenbauer(lam, k, x)


cpdef double assoc_legendre(int l, int m, double x):
    return c_assoc_legendre(l, m, x)


cpdef double log_bessel_i(int nu, double z):
    """ln I_nu(z) for integer nu >= 0 and z > 0 by the rescaled power series."""
    return c_log_bessel_i(nu, z)


cpdef double hyd_alpha(double alpha, double nu):
    return c_hyd_alpha(alpha, nu)


cpdef double hyd_x_entropy(double x, int n, int l):
    return c_hyd_x_entropy(x, n, l)


cpdef double hyd_x_weight(double x, int n, int l):
    return c_hyd_x_weight(x, n, l)


cpdef double legendre_entropy(double t, int l, int m):
    return c_legendre_entropy(t, l, m)


cpdef double legendre_norm(double t, int l, int m):
    return c_legendre_norm(t, l, m)


def quad_named(int code, double p0, double p1, double a, double b,
               double abs_tol, double rel_tol, int limit):
    """Adaptive quadrature of one of the built-in integrands."""
    if code < 0 or code > 4:
        raise ValueError(f"unknown integrand code {code}")
    cdef int cap = 64, size = 1, i, worst, status = -1
    cdef double *lo = <double*>malloc(cap * sizeof(double))
    cdef double *hi = <double*>malloc(cap * sizeof(double))
    cdef double *res = <double*>malloc(cap * sizeof(double))
    cdef double *err = <double*>malloc(cap * sizeof(double))
    cdef double total = 0.0, errsum = 0.0, tol, left, right, mid
    cdef double r1, e1, r2, e2
    if lo == NULL or hi == NULL or res == NULL or err == NULL:
        free(lo); free(hi); free(res); free(err)
        raise MemoryError()
    try:
        with nogil:
            lo[0] = a
            hi[0] = b
            c_gk21(code, p0, p1, a, b, &res[0], &err[0])
            while True:
                total = 0.0
                errsum = 0.0
                for i in range(size):
                    total += res[i]
                    errsum += err[i]
                tol = rel_tol * fabs(total)
                if abs_tol > tol:
                    tol = abs_tol
                if errsum <= tol:
                    status = 0
                    break
                if size >= limit:
                    status = 1
                    break
                worst = 0
                for i in range(1, size):
                    if err[i] > err[worst]:
                        worst = i
                left = lo[worst]
                right = hi[worst]
                mid = 0.5 * (left + right)
                if not (left < mid and mid < right):
                    status = 2
                    break
                c_gk21(code, p0, p1, left, mid, &r1, &e1)
                c_gk21(code, p0, p1, mid, right, &r2, &e2)
                if size == cap:
                    cap *= 2
                    lo = <double*>realloc(lo, cap * sizeof(double))
                    hi = <double*>realloc(hi, cap * sizeof(double))
                    res = <double*>realloc(res, cap * sizeof(double))
                    err = <double*>realloc(err, cap * sizeof(double))
                    if lo == NULL or hi == NULL or res == NULL or err == NULL:
                        status = -1
                        break
                hi[worst] = mid
                res[worst] = r1
                err[worst] = e1
                lo[size] = mid
                hi[size] = right
                res[size] = r2
                err[size] = e2
                size += 1
        if status < 0:
            raise MemoryError()
        return total, errsum, status, size
    finally:
        free(lo); free(hi); free(res); free(err)
