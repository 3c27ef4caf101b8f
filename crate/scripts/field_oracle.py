#!/usr/bin/env python3
"""Generate the shipped number-field certificates under data/fields/.

Independent of the Rust code: integral bases are written down from the
tensor structure of each compositum, checked here for integrality (monic
integer characteristic polynomials) and for the trace-form discriminant,
and units are located numerically and then confirmed to have norm +-1.
"""
import itertools
import json
import os
import sys

import numpy as np
from sympy import I, Matrix, Poly, Rational, ZZ, QQ, sqrt, symbols, resultant, expand, minimal_polynomial, CRootOf, nroots

x, t, s = symbols("x t s")
OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data", "fields")


def poly_mod(p, f):
    return Poly(p, x).rem(Poly(f, x))


def coords_in_power_basis(expr_poly, f, n):
    r = poly_mod(expr_poly, f)
    cs = r.all_coeffs()[::-1]
    cs = cs + [0] * (n - len(cs))
    return [Rational(c) for c in cs]


def mult_matrix(v, basis_rows, f, n):
    """Matrix of multiplication by element with power-basis coords v, in the given basis."""
    B = Matrix(basis_rows)
    Binv = B.inv()
    elem = sum(v[k] * x**k for k in range(n))
    rows = []
    for b in basis_rows:
        be = sum(b[k] * x**k for k in range(n))
        pc = coords_in_power_basis(expand(elem * be), f, n)
        rows.append(list(Matrix([pc]) * Binv))
    return Matrix(rows)


def char_poly(v, basis_rows, f, n):
    M = mult_matrix(v, basis_rows, f, n)
    return M.charpoly(t).all_coeffs()


def check_certificate(f, basis_rows, disc):
    n = len(basis_rows)
    for b in basis_rows:
        cp = char_poly(b, basis_rows, f, n)
        assert all(c.is_integer for c in cp), ("non-integral basis element", b, cp)
    # ring closure
    B = Matrix(basis_rows)
    Binv = B.inv()
    for bi in basis_rows:
        for bj in basis_rows:
            e = expand(sum(bi[k] * x**k for k in range(n)) * sum(bj[k] * x**k for k in range(n)))
            c = Matrix([coords_in_power_basis(e, f, n)]) * Binv
            assert all(v.is_integer for v in c), "basis not closed"
    # trace form
    T = Matrix(n, n, lambda i, j: mult_matrix(
        coords_in_power_basis(expand(sum(basis_rows[i][k] * x**k for k in range(n)) *
                                     sum(basis_rows[j][k] * x**k for k in range(n))), f, n),
        basis_rows, f, n).trace())
    d = T.det()
    assert d == disc, (d, disc)



def hnf_rows(rows):
    """Row-style HNF over Q scaled by common denominator; returns a basis of the Z-span."""
    from sympy.matrices.normalforms import hermite_normal_form
    from math import lcm
    den = 1
    for r in rows:
        for c in r:
            den = lcm(den, Rational(c).q)
    M = Matrix([[Rational(c) * den for c in r] for r in rows]).T
    H = hermite_normal_form(M)
    cols = [list(H[:, j]) for j in range(H.shape[1])]
    return [[Rational(c, den) for c in col] for col in cols]


def to_strs(rows):
    return [[str(Rational(c)) for c in r] for r in rows]


def numeric_embeddings(f):
    return [complex(r) for r in Poly(f, x).nroots(n=40)]


def evaluate(v, root):
    return sum(complex(v[k]) * root**k for k in range(len(v)))


def find_poly_roots_in_field(g, f, basis_rows, denom=1):
    """Find elements of the field (integral-basis coordinates) that are roots of g."""
    n = len(basis_rows)
    th = numeric_embeddings(f)
    E = np.array([[evaluate(b, r) for b in basis_rows] for r in th])
    groots = [complex(r) for r in Poly(g, x).nroots(n=40)]
    found = set()
    for assign in itertools.product(range(len(groots)), repeat=n):
        rhs = np.array([groots[a] for a in assign])
        sol = np.linalg.solve(E, rhs)
        if np.max(np.abs(sol.imag)) > 1e-6:
            continue
        c = np.round(sol.real * denom)
        if np.max(np.abs(sol.real * denom - c)) < 1e-6:
            found.add(tuple(int(v) for v in c))
    out = []
    for c in sorted(found):
        v = [sum(Rational(c[i], denom) * basis_rows[i][k] for i in range(n)) for k in range(n)]
        val = expand(Poly(g, x).as_expr().subs(x, sum(v[k] * t**k for k in range(n))))
        if poly_mod(val.subs(t, x), f).is_zero:
            out.append(list(c))
    return out


def field_json(f, basis_rows, disc, sig, units, torsion, name, notes):
    n = len(basis_rows)
    coeffs = [int(c) for c in Poly(f, x).all_coeffs()[::-1]]
    return {
        "name": name,
        "defining_poly": coeffs,
        "integral_basis": to_strs(basis_rows),
        "field_disc": int(disc),
        "signature": list(sig),
        "torsion": [int(c) for c in torsion],
        "units": [[int(c) for c in u] for u in units],
        "notes": notes,
    }


def write(name, doc):
    path = os.path.join(OUT, name + ".json")
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    print("wrote", path)




def tensor_field(minpolys, syms, theta_lin, n):
    """Exact arithmetic in Q[a,b]/(ma, mb): reduce a polynomial in the generator symbols."""
    def reduce(e):
        e = expand(e)
        for m, sy in zip(minpolys, syms):
            e = Poly(e, sy).rem(Poly(m, sy)).as_expr()
            e = expand(e)
        return e

    monos = [a**i * b**j for i in range(Poly(minpolys[0], syms[0]).degree())
             for j in range(Poly(minpolys[1], syms[1]).degree())
             for a, b in [tuple(syms)]]

    def vec(e):
        e = reduce(e)
        P = Poly(e, *syms)
        return [P.coeff_monomial(m) for m in monos]

    powers = [vec(theta_lin**k) for k in range(n)]
    A = Matrix(powers)  # rows: theta^k in mono coords
    Ainv = A.inv()

    def power_coords(e):
        return list(Matrix([vec(e)]) * Ainv)

    return reduce, monos, power_coords


def main():
    docs = {}

    # Q
    f = x - 0
    docs["q"] = field_json(x, [[1]], 1, (1, 0), [], [-1], "Q", "rational field, theta = 0")

    # Q(i)
    f = x**2 + 1
    check_certificate(f, [[1, 0], [0, 1]], -4)
    docs["q_i"] = field_json(f, [[1, 0], [0, 1]], -4, (0, 1), [], [0, 1], "Q(i)", "theta = i")

    # Q(sqrt(-19)), theta = (1+sqrt(-19))/2
    f = x**2 - x + 5
    check_certificate(f, [[1, 0], [0, 1]], -19)
    docs["q_sqrt_m19"] = field_json(f, [[1, 0], [0, 1]], -19, (0, 1), [], [-1, 0],
                                    "Q(sqrt(-19))", "theta = (1+sqrt(-19))/2")

    # Q(i, sqrt(-19)), theta = i + omega, omega = (1+sqrt(-19))/2
    a, b = symbols("a b")
    reduce, monos, pc = tensor_field([a**2 + 1, b**2 - b + 5], [a, b], a + b, 4)
    f = x**4 - 2 * x**3 + 13 * x**2 - 12 * x + 17
    basis = [pc(m) for m in [1, a, b, a * b]]
    check_certificate(f, basis, 5776)
    eps_roots = find_poly_roots_in_field(x**4 + 26 * x**3 + 338 * x**2 - 26 * x + 1, f, basis)
    assert len(eps_roots) == 4, eps_roots
    i_coords = [0, 1, 0, 0]
    assert find_poly_roots_in_field(x**2 + 1, f, basis) == sorted([[0, 1, 0, 0], [0, -1, 0, 0]])
    doc = field_json(f, basis, 5776, (0, 2), [eps_roots[0]], i_coords, "Q(i, sqrt(-19))",
                     "theta = i + (1+sqrt(-19))/2; basis 1, i, w, i*w with w = (1+sqrt(-19))/2; "
                     "unit is a root of x^4 + 26x^3 + 338x^2 - 26x + 1")
    doc["unit_alternatives"] = [[int(c) for c in r] for r in eps_roots]
    docs["q_i_sqrt_m19"] = doc

    # F = Q(sqrt(-19), alpha), alpha^3 - 2 alpha - 2 = 0, theta = alpha + omega
    reduce, monos, pc = tensor_field([a**3 - 2 * a - 2, b**2 - b + 5], [a, b], a + b, 6)
    thr = [c for c in Poly(minimal_polynomial(CRootOf(x**3 - 2 * x - 2, 0) + (1 + sqrt(-19)) / 2, x), x).all_coeffs()]
    f = Poly(thr, x).as_expr()
    order_gens = [pc(a**i * b**j) for i in range(3) for j in range(2)]
    extra = pc((2 * b - 1) * (a**2 - 11 * a + 24) / 19)
    basis = hnf_rows(order_gens + [extra])
    basis = [r for r in basis if any(c != 0 for c in r)]
    assert len(basis) == 6
    check_certificate(f, basis, -109744)
    n = 6
    # units: small-box numeric search, confirmed by exact norm
    th = numeric_embeddings(f)
    E = np.array([[evaluate(bb, r) for bb in basis] for r in th])
    cands = []
    R = 3
    for c in itertools.product(range(-R, R + 1), repeat=n):
        if not any(c):
            continue
        vals = E @ np.array(c, dtype=float)
        nm = np.prod(np.abs(vals))
        if abs(nm - 1) < 1e-6:
            cands.append((c, np.log(np.abs(vals))))
    places = [k for k in range(n) if th[k].imag > 0]
    assert len(places) == 3
    # the pair of smallest nonzero regulator among the candidates
    pick = None
    for i1 in range(len(cands)):
        for i2 in range(i1 + 1, len(cands)):
            l1 = [2 * cands[i1][1][k] for k in places[:2]]
            l2 = [2 * cands[i2][1][k] for k in places[:2]]
            reg = abs(l1[0] * l2[1] - l1[1] * l2[0])
            if reg > 1e-6 and (pick is None or reg < pick[2] - 1e-9):
                pick = (cands[i1][0], cands[i2][0], reg)
    u1, u2, reg = pick
    for u in (u1, u2):
        v = [sum(u[i] * basis[i][k] for i in range(n)) for k in range(n)]
        M = mult_matrix(v, basis, f, n)
        assert abs(M.det()) == 1
    minus_one = [-1, 0, 0, 0, 0, 0]
    B = Matrix(basis)
    torsion = list(Matrix([[-1, 0, 0, 0, 0, 0]]) * B.inv())
    doc = field_json(f, basis, -109744, (0, 3), [u1, u2], torsion, "Q(sqrt(-19), alpha)",
                     "theta = alpha + (1+sqrt(-19))/2 with alpha^3 - 2 alpha - 2 = 0; "
                     "basis is the HNF of Z[alpha, w] + Z*(2w-1)(alpha^2-11alpha+24)/19; "
                     "units from a small-box search, regulator of the pair %.6f" % reg)
    docs["f_sextic"] = doc
    # alpha and sqrt(-19) coordinates for reference
    Binv = B.inv()
    doc["reference_elements"] = {
        "alpha": [str(c) for c in (Matrix([pc(a)]) * Binv)],
        "sqrt_m19": [str(c) for c in (Matrix([pc(2 * b - 1)]) * Binv)],
    }
    docs["q_i_sqrt_m19"]["reference_elements"] = {
        "i": ["0", "1", "0", "0"],
        "sqrt_m19": ["-1", "0", "2", "0"],
    }

    for k, d in docs.items():
        write(k, d)


if __name__ == "__main__":
    main()
