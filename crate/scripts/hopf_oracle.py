"""Point-evaluation oracle for the rank-4 group laws.

Solves the relations over the quadratic field they generate, evaluates each
law on all points and checks closure, identity, commutativity,
associativity and the annihilation order. Independent of the Rust code.
"""
import itertools
import sys

import sympy as sp

FAMILIES = {
    # name: (y roots, x-relation in x, y, n, law coefficient, S_y, expected order, disc)
    "z2_mu2": (lambda n: [0, -2], lambda x, y, n: x**2 - x + n * y,
               lambda n: sp.Rational(n, 8 * n + 1), lambda y, z: y + z + y * z, 2, lambda n: 8 * n + 1),
    "z2_z2": (lambda n: [0, 1], lambda x, y, n: x**2 - x - n * y,
              lambda n: sp.Rational(2 * n, 4 * n + 1), lambda y, z: y + z - 2 * y * z, 2, lambda n: 4 * n + 1),
    "z4": (lambda n: [0, 1], lambda x, y, n: x**2 - x - n * y,
           lambda n: sp.Rational(2 * n + 1, 4 * n + 1), lambda y, z: y + z - 2 * y * z, 4, lambda n: 4 * n + 1),
}


def points(fam, n):
    yroots, rel, _, _, _, _ = FAMILIES[fam]
    x = sp.Symbol("x")
    pts = []
    for y in yroots(n):
        for r in sp.solve(rel(x, y, n), x):
            pts.append((sp.nsimplify(r), sp.Integer(y)))
    return pts


def law(fam, n):
    _, _, c, sy, _, _ = FAMILIES[fam]
    k = c(n)

    def add(p, q):
        (x, y), (w, z) = p, q
        sx = x + w - 2 * x * w + k * y * z * (1 - 2 * x) * (1 - 2 * w)
        return (sp.simplify(sp.expand(sx)), sp.simplify(sp.expand(sy(y, z))))

    return add


def same(p, q):
    return all(sp.simplify(a - b) == 0 for a, b in zip(p, q))


def check(fam, n):
    pts = points(fam, n)
    add = law(fam, n)
    assert len(pts) == 4, pts

    def find(p):
        hits = [q for q in pts if same(p, q)]
        assert len(hits) == 1, (fam, n, p)
        return hits[0]

    zero = (sp.Integer(0), sp.Integer(0))
    for p in pts:
        assert same(add(p, zero), p)
    for p, q in itertools.product(pts, repeat=2):
        find(add(p, q))
        assert same(add(p, q), add(q, p))
    for p, q, r in itertools.product(pts, repeat=3):
        assert same(add(add(p, q), r), add(p, add(q, r))), (fam, n, p, q, r)
    order = 1
    while True:
        ok = True
        for p in pts:
            acc = p
            for _ in range(order - 1):
                acc = find(add(acc, p))
            ok &= same(acc, zero)
        if ok:
            break
        order *= 2
    assert order == FAMILIES[fam][4], (fam, n, order)
    disc = FAMILIES[fam][5](n)
    return order, disc


def main():
    ns = [int(a) for a in sys.argv[1:]] or [2]
    for fam in FAMILIES:
        for n in ns:
            order, disc = check(fam, n)
            print(f"{fam} n={n}: group of order 4, exponent {order}, points over Q(sqrt({disc}))")


if __name__ == "__main__":
    main()
