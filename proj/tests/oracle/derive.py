"""Brute-force reference values frozen into the C++ tests.

Everything here is computed without the library: direct enumeration for
monomial counts, sympy for exact ranks and derivatives.
"""
import itertools
import random

import sympy as sp


def count(w, d):
    if d < 0:
        return 0
    n = 0
    def rec(i, rest):
        nonlocal n
        if i == len(w) - 1:
            n += rest % w[i] == 0
            return
        for e in range(rest // w[i] + 1):
            rec(i + 1, rest - e * w[i])
    rec(0, d)
    return n


def monomials(w, d):
    out = []
    for e in itertools.product(*[range(d // a + 1) for a in w]):
        if sum(a * x for a, x in zip(w, e)) == d:
            out.append(e)
    return sorted(out, reverse=True)


def double_point_rank(w, r, d, seed):
    rng = random.Random(seed)
    mons = monomials(w, d)
    rows = []
    for _ in range(r):
        p = [1] + [rng.randint(1, 10**6) for _ in w[1:]]
        for j in range(len(w)):
            row = []
            for e in mons:
                if e[j] == 0:
                    row.append(0)
                    continue
                val = e[j]
                for l, x in enumerate(p):
                    val *= x ** (e[l] - (1 if l == j else 0))
                row.append(val)
            rows.append(row)
    if not mons:
        return 0
    return sp.Matrix(rows).rank()


def herzog(a, b, c):
    def rel(x, y, z):
        r = 1
        while True:
            sols = [(k, g) for k in range(r * x // y + 1) for g in range(r * x // z + 1)
                    if k * y + g * z == r * x]
            if sols:
                return r, min(sols)
            r += 1
    return rel(a, b, c), rel(b, a, c), rel(c, a, b)


def triangle(b, c, d):
    e, x0, y0 = d // 2, d // (2 * b), d // (2 * c)
    T = {(x, y) for x in range(d // b + 1) for y in range(d // c + 1) if b * x + c * y <= d}
    t1 = {p for p in T if b * p[0] + c * p[1] <= e}
    t2 = {(x + x0, y) for x, y in t1}
    t3 = {(x, y + y0) for x, y in t1}
    return len(T), len(t1), len(t2 & T), len(t3 & T), len(t1 & t2), len(t2 & t3), len(t1 & t3)


if __name__ == "__main__":
    print("s(1,2,3) 0..20:", [count((1, 2, 3), d) for d in range(21)])
    print("s(1,2,3)_14, _11, _7, _8:", count((1, 2, 3), 14), count((1, 2, 3), 11),
          count((1, 2, 3), 7), count((1, 2, 3), 8))
    print("s(2,3) 0..6:", [count((2, 3), d) for d in range(7)])
    print("s(1,3)_7:", count((1, 3), 7), "s(1,2)_14:", count((1, 2), 14))
    print("s(1,2,3)_1000:", count((1, 2, 3), 1000))
    print("s(1,4,57)_25, _50:", count((1, 4, 57), 25), count((1, 4, 57), 50))
    print("s(1,5,9) 20..22:", [count((1, 5, 9), d) for d in (20, 21, 22)],
          "s_10:", count((1, 5, 9), 10))
    print("s(1,1,1)_10:", count((1, 1, 1), 10), "s_5:", count((1, 1, 1), 5))
    print("s(2,3,5,7)_30:", count((2, 3, 5, 7), 30), "s(1,1,1,1,1)_12:", count((1, 1, 1, 1, 1), 12))
    print("monomials (1,2,3) d=3:", monomials((1, 2, 3), 3))
    print("herzog (3,4,5):", herzog(3, 4, 5))
    print("herzog (1,2,3):", herzog(1, 2, 3))
    print("herzog (2,3,7):", herzog(2, 3, 7))
    print("rank (1,2,3) r=1 d=2:", double_point_rank((1, 2, 3), 1, 2, 1))
    print("rank (1,2,3) r=2 d=6:", double_point_rank((1, 2, 3), 2, 6, 2))
    print("rank (1,1,1) r=5 d=4:", double_point_rank((1, 1, 1), 5, 4, 3))
    print("rank (1,1,1) r=2 d=2:", double_point_rank((1, 1, 1), 2, 2, 4))
    print("rank (1,5,9) r=3 d=21:", double_point_rank((1, 5, 9), 3, 21, 5), "s_21", count((1, 5, 9), 21))
    print("rank (1,2,5) r=1 d=4:", double_point_rank((1, 2, 5), 1, 4, 6), "s_4", count((1, 2, 5), 4))
    print("rank (1,3,5) r=3 d=12:", double_point_rank((1, 3, 5), 3, 12, 7), "s_12", count((1, 3, 5), 12),
          "s_6", count((1, 3, 5), 6))
    print("triangle (2,3,30):", triangle(2, 3, 30))
    print("triangle (5,9,90):", triangle(5, 9, 90))
    print("bound (2,3,30):", count((1, 2, 3), 30) // 3, count((1, 2, 3), 15))
    print("bound (1,1,10):", count((1, 1, 1), 10) // 3, count((1, 1, 1), 5))
    # hyperplane quotients of P(1,2,3): s' = P(2,3), s'' = P(1,3), s''' = P(1,2)
    for d in (6, 7, 8, 11, 14):
        print("d", d, "s'", count((2, 3), d), "s''", count((1, 3), d), "s'''", count((1, 2), d),
              "s_{d-3}", count((1, 2, 3), d - 3))
