"""Regenerate the 10/21-point Gauss-Kronrod nodes and weights.

The Kronrod nodes are the roots of the Stieltjes polynomial E_11, i.e. the
monic odd polynomial of degree 11 orthogonal to x^j for j <= 10 under the
weight P_10(x) on [-1, 1]. Weights follow from exactness on monomials.

Usage: python tools/gen_gk21.py
"""
import mpmath as mp

mp.mp.dps = 60
N = 10


def legendre_poly(n):
    return mp.taylor(lambda x: mp.legendre(n, x), 0, n)


def integral_monomial(k):
    return mp.mpf(0) if k % 2 else mp.mpf(2) / (k + 1)


def main():
    p10 = legendre_poly(N)
    # unknown odd coefficients c1, c3, ..., c9 of E_11 = x^11 + sum c_k x^k
    odd = [1, 3, 5, 7, 9]

    def moment(power, j):
        return mp.fsum(p10[i] * integral_monomial(i + power + j) for i in range(len(p10)))

    A = mp.matrix(len(odd), len(odd))
    rhs = mp.matrix(len(odd), 1)
    for r, j in enumerate(odd):
        for c, k in enumerate(odd):
            A[r, c] = moment(k, j)
        rhs[r] = -moment(11, j)
    coef = mp.lu_solve(A, rhs)
    poly = [mp.mpf(0)] * 12
    poly[11] = mp.mpf(1)
    for c, k in enumerate(odd):
        poly[k] = coef[c]
    kronrod_extra = sorted(mp.polyroots(poly[::-1], maxsteps=200, extraprec=200))
    gauss = sorted(mp.polyroots(p10[::-1], maxsteps=200, extraprec=200))
    nodes = sorted([mp.re(x) for x in kronrod_extra] + [mp.re(x) for x in gauss])

    V = mp.matrix(21, 21)
    b = mp.matrix(21, 1)
    for i in range(21):
        for j in range(21):
            V[i, j] = nodes[j] ** i
        b[i] = integral_monomial(i)
    wk = mp.lu_solve(V, b)

    Vg = mp.matrix(10, 10)
    bg = mp.matrix(10, 1)
    for i in range(10):
        for j in range(10):
            Vg[i, j] = mp.re(gauss[j]) ** i
        bg[i] = integral_monomial(i)
    wg = mp.lu_solve(Vg, bg)

    # emit nonnegative abscissae, descending, in QUADPACK order (xgk[1::2] are Gauss)
    half = [(nodes[j], wk[j]) for j in range(21) if nodes[j] >= -mp.mpf(10) ** -40]
    half.sort(key=lambda t: -t[0])
    print("XGK = (")
    for x, _ in half:
        print(f"    {mp.nstr(x, 20, strip_zeros=False)},")
    print(")")
    print("WGK = (")
    for _, w in half:
        print(f"    {mp.nstr(w, 20, strip_zeros=False)},")
    print(")")
    gpos = sorted([(mp.re(gauss[j]), wg[j]) for j in range(10) if gauss[j].real > 0], key=lambda t: -t[0])
    print("WG = (")
    for _, w in gpos:
        print(f"    {mp.nstr(w, 20, strip_zeros=False)},")
    print(")")


if __name__ == "__main__":
    main()
