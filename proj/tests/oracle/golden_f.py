#!/usr/bin/env python3
"""Brute-force reference values for f_mu.

Two independent computations per composition:
  * the filling sum, over every assignment of 1..n to the diagram (no pruning);
  * the unique monic triangular common eigenvector of Y_1..Y_n, solved from the
    operator definitions with sympy.
Both must agree; the result is written to tests/data/golden_f.json.

Usage: golden_f.py [--max-n 3] [--max-part 2] [--output PATH]
"""

import argparse
import itertools
import json
from fractions import Fraction
from pathlib import Path

import sympy as sp

q, t = sp.symbols("q t")


def attacks(s, s2):
    (i, j), (i2, j2) = s, s2
    return i < i2 and (j == j2 or j == j2 + 1)


def alpha(mu, i, j):
    n = len(mu)
    m = mu[i - 1]
    r = sum(1 for k in range(1, i) if mu[k - 1] == m)
    r += sum(1 for k in range(1, n + 1) if k != i and j < mu[k - 1] < m)
    r += sum(1 for k in range(i + 1, n + 1) if mu[k - 1] == j)
    return r


def fillings(mu):
    n = len(mu)
    squares = [(i, j) for i in range(1, n + 1) for j in range(1, mu[i - 1] + 1)]
    extended = [(i, j) for i in range(1, n + 1) for j in range(0, mu[i - 1] + 1)]
    pairs = [(a, b) for a in extended for b in extended if attacks(a, b)]
    for values in itertools.product(range(1, n + 1), repeat=len(squares)):
        sigma = {(i, 0): i for i in range(1, n + 1)}
        sigma.update(zip(squares, values))
        if all(sigma[a] != sigma[b] for a, b in pairs):
            yield sigma


def summand(mu, sigma, xs):
    n = len(mu)
    w = sp.Integer(1)
    pos = neg = 0
    for i in range(1, n + 1):
        for j in range(1, mu[i - 1] + 1):
            w *= xs[sigma[(i, j)] - 1]
            l, a = mu[i - 1] - j, alpha(mu, i, j - 1)
            hook = 1 - q ** (l + 1) * t ** (a + 1)
            if sigma[(i, j)] > sigma[(i, j - 1)]:
                w *= (1 - t) / hook
            elif sigma[(i, j)] < sigma[(i, j - 1)]:
                w *= q ** (l + 1) * t**a * (1 - t) / hook
            for i2 in range(i + 1, n + 1):
                if j - 1 > mu[i2 - 1]:
                    continue
                top = sigma[(i2, j)] if j <= mu[i2 - 1] else float("inf")
                mid, low = sigma[(i, j)], sigma[(i2, j - 1)]
                pos += top > mid > low
                neg += top < mid < low
    return w * t ** (pos - neg)


def f_fillings(mu, xs):
    return sp.expand(sum((summand(mu, s, xs) for s in fillings(mu)), sp.Integer(0)))


# Operators on polynomials in xs with coefficients in Q(q,t).


def divided_difference(p, xs, i):
    a, b = xs[i - 1], xs[i]
    swapped = p.subs({a: b, b: a}, simultaneous=True)
    quo, rem = sp.div(sp.Poly(p - swapped, *xs), sp.Poly(a - b, *xs))
    assert rem.is_zero
    return quo.as_expr()


def T(p, xs, i):
    return t * p - (xs[i - 1] - t * xs[i]) * divided_difference(p, xs, i)


def T_inv(p, xs, i):
    return (p - (xs[i - 1] - t * xs[i]) * divided_difference(p, xs, i)) / t


def omega(p, xs):
    n = len(xs)
    return p.subs({xs[k]: (xs[k + 1] if k + 1 < n else q * xs[0]) for k in range(n)}, simultaneous=True)


def Y(p, xs, i):
    n = len(xs)
    for k in range(i, n):
        p = T_inv(p, xs, k)
    p = omega(p, xs)
    for k in range(1, i):
        p = T(p, xs, k)
    return p


def eigenvalue(mu, i):
    n = len(mu)
    m = mu[i - 1]
    eta = -sum(1 for j in range(1, i) if mu[j - 1] > m) - sum(1 for j in range(i + 1, n + 1) if mu[j - 1] >= m)
    return q**m * t ** (eta + i - 1)


def dominated_strict(nu, mu):
    if nu == mu:
        return False
    return all(sum(nu[:k]) <= sum(mu[:k]) for k in range(1, len(mu) + 1))


def bracket_less(nu, mu):
    ns, ms = sorted(nu, reverse=True), sorted(mu, reverse=True)
    if ns != ms:
        return dominated_strict(ns, ms)
    return dominated_strict(nu, mu)


def f_eigen(mu, xs):
    n = len(mu)
    size = sum(mu)
    rmu = tuple(reversed(mu))
    support = [
        nu
        for nu in itertools.product(range(size + 1), repeat=n)
        if sum(nu) == size and nu != tuple(mu) and bracket_less(tuple(reversed(nu)), rmu)
    ]
    cs = sp.symbols(f"c0:{len(support)}")

    def mono(e):
        return sp.Mul(*[x**k for x, k in zip(xs, e)])

    f = mono(mu) + sum((c * mono(nu) for c, nu in zip(cs, support)), sp.Integer(0))
    equations = []
    for i in range(1, n + 1):
        residual = sp.together(Y(f, xs, i) - eigenvalue(mu, i) * f)
        num = sp.numer(residual)
        equations.extend(sp.Poly(sp.expand(num), *xs).coeffs())
    if not support:
        assert all(sp.simplify(e) == 0 for e in equations)
        return sp.expand(f)
    solution = sp.solve(equations, cs, dict=True)
    assert len(solution) == 1, f"no unique eigenvector for {mu}"
    return sp.expand(f.subs(solution[0]))


def qt_json(expr):
    num, den = sp.fraction(sp.cancel(sp.together(expr)))

    def terms(p):
        out = []
        for (a, b), c in sorted(sp.Poly(p, q, t).terms(), reverse=True):
            c = Fraction(int(sp.numer(c)), int(sp.denom(c)))
            out.append([a, b, f"{c.numerator}/{c.denominator}"])
        return out

    return {"num": terms(num), "den": terms(den)}


def poly_json(expr, xs):
    p = sp.Poly(expr, *xs)
    terms = [{"exps": list(e), "coeff": qt_json(c)} for e, c in p.terms()]
    return {"nvars": len(xs), "terms": terms}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=3)
    parser.add_argument("--max-part", type=int, default=2)
    parser.add_argument("--output", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "golden_f.json")
    args = parser.parse_args()

    entries = []
    for n in range(1, args.max_n + 1):
        xs = sp.symbols(f"x1:{n + 1}")
        for mu in itertools.product(range(args.max_part + 1), repeat=n):
            a = f_fillings(mu, xs)
            b = f_eigen(mu, xs)
            assert sp.simplify(a - b) == 0, f"filling sum and eigenvector differ for {mu}"
            entries.append({"mu": list(mu), "poly": poly_json(sp.collect(a, xs), xs)})
            print(mu, "ok", flush=True)
    args.output.write_text(json.dumps({"goldens": entries}, indent=1) + "\n")


if __name__ == "__main__":
    main()
