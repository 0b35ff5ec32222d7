"""Characteristic-zero oracles built directly in sympy, sharing no code with the package."""

import itertools
import random

import sympy as sp


def veronese_exprs(n, d):
    xs = sp.symbols(f"x0:{n + 1}")
    monos = sorted(
        (e for e in itertools.product(range(d + 1), repeat=n + 1) if sum(e) == d), reverse=True
    )
    return [sp.prod([x**k for x, k in zip(xs, e)]) for e in monos], list(xs)


def segre_exprs(a, b):
    xs, ys = sp.symbols(f"x0:{a + 1}"), sp.symbols(f"y0:{b + 1}")
    return [x * y for x in xs for y in ys], list(xs) + list(ys)


def pluecker_exprs(r):
    top, bot = sp.symbols(f"a0:{r + 1}"), sp.symbols(f"b0:{r + 1}")
    return [top[i] * bot[j] - top[j] * bot[i] for i, j in itertools.combinations(range(r + 1), 2)], list(top) + list(bot)


def scroll_exprs(a, b):
    s, t, u, v = sp.symbols("s t u v")
    coords = [s ** (a - i) * t**i * u for i in range(a + 1)] + [s ** (b - i) * t**i * v for i in range(b + 1)]
    return coords, [s, t, u, v]


def stacked_rank(exprs, variables, npoints, seed=0, trials=3):
    """Rank over Q of Jacobians stacked at ``npoints`` random integer points (max over trials)."""
    jac = sp.Matrix(exprs).jacobian(variables).T
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        blocks = []
        for _ in range(npoints):
            sub = {v: rng.randint(-50, 50) for v in variables}
            blocks.append(jac.subs(sub))
        best = max(best, sp.Matrix.vstack(*blocks).rank())
    return best


def secant_dims(exprs, variables, span):
    """dim S^k for k = 0, 1, ... until the span is reached."""
    dims, k = [], 0
    while True:
        dims.append(stacked_rank(exprs, variables, k + 1) - 1)
        if dims[-1] == span:
            return dims
        k += 1
