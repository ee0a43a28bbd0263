"""Exact feasibility for ``A x = b, x >= 0`` over the rationals.

Phase-one simplex on a dense Fraction tableau with Bland's rule, so it
terminates without any tolerance. An infeasible system comes back with a
Farkas witness ``y`` (``y A >= 0`` and ``y b < 0``) that is re-checked
before being returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = ["LPResult", "solve_nonneg_linear"]


@dataclass
class LPResult:
    feasible: bool
    x: list | None = None        # a solution when feasible
    witness: list | None = None  # Farkas certificate when not


def solve_nonneg_linear(A: Sequence[Sequence], b: Sequence) -> LPResult:
    m = len(A)
    n = len(A[0]) if m else 0
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    if m == 0:
        return LPResult(True, x=[Fraction(0)] * n)

    sign = [1 if bi >= 0 else -1 for bi in b]
    T = []
    for i in range(m):
        row = [sign[i] * v for v in A[i]]
        row += [Fraction(int(k == i)) for k in range(m)]
        row.append(sign[i] * b[i])
        T.append(row)
    ncol = n + m
    basis = [n + i for i in range(m)]
    # reduced costs for min sum(artificials)
    z = [-sum(T[i][j] for i in range(m)) for j in range(n)] + [Fraction(0)] * m
    obj = sum(T[i][ncol] for i in range(m))

    while True:
        enter = next((j for j in range(ncol) if z[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][ncol] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # cannot happen: phase one is bounded below by 0
            raise RuntimeError("phase-one problem reported unbounded")
        r = best[1]
        piv = T[r][enter]
        T[r] = [v / piv for v in T[r]]
        for i in range(m):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [u - f * v for u, v in zip(T[i], T[r])]
        f = z[enter]
        z = [u - f * v for u, v in zip(z, T[r][:ncol])]
        obj = obj - f * T[r][ncol]
        basis[r] = enter

    obj = sum(T[i][ncol] for i in range(m) if basis[i] >= n)
    if obj == 0:
        x = [Fraction(0)] * n
        for i, j in enumerate(basis):
            if j < n:
                x[j] = T[i][ncol]
        for i in range(m):
            if sum(A[i][j] * x[j] for j in range(n)) != b[i]:
                raise RuntimeError("simplex produced a non-solution")
        return LPResult(True, x=x)

    y = [1 - z[n + i] for i in range(m)]
    w = [-y[i] * sign[i] for i in range(m)]
    if any(sum(w[i] * A[i][j] for i in range(m)) < 0 for j in range(n)):
        raise RuntimeError("Farkas witness failed yA >= 0")
    if sum(w[i] * b[i] for i in range(m)) >= 0:
        raise RuntimeError("Farkas witness failed yb < 0")
    return LPResult(False, witness=w)
