"""Exact rational feasibility oracle for equality-constrained systems
A x = b, x >= 0, solved by a revised phase-one simplex over Fractions.

Bland's smallest-index rule is used for both the entering and leaving
choices, which rules out cycling, so termination is unconditional.  On
infeasible systems the simplex multipliers of the optimal phase-one basis
form a Farkas certificate y with y.A_j <= 0 for every column and y.b > 0;
the certificate is re-verified before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class LPError(RuntimeError):
    """Internal invariant of the pivoting method failed."""


@dataclass(frozen=True)
class Infeasible:
    """Farkas certificate: y.column <= 0 for all columns while y.rhs > 0."""

    y: tuple[Fraction, ...]


@dataclass(frozen=True)
class Feasible:
    """Nonnegative solution, sparse: {column index: value > 0}."""

    x: dict


def _support(column):
    """Split a column into (+1 positions, -1 positions, other entries).

    Columns made of 0/1/-1 entries admit a multiplication-free dot
    product, which dominates the pricing cost on large vertex lists.
    """
    pos, neg, other = [], [], []
    for i, v in enumerate(column):
        if v == 1:
            pos.append(i)
        elif v == -1:
            neg.append(i)
        elif v != 0:
            other.append((i, Fraction(v)))
    return tuple(pos), tuple(neg), tuple(other)


def solve_feasibility(columns, rhs) -> Feasible | Infeasible:
    """Decide whether rhs lies in the cone {A x : x >= 0} spanned by the
    given columns (each a sequence of length len(rhs))."""
    m = len(rhs)
    n_real = len(columns)
    for c in columns:
        if len(c) != m:
            raise ValueError("column length does not match rhs")

    # normalize signs so the right-hand side is nonnegative
    signs = [1 if Fraction(v) >= 0 else -1 for v in rhs]
    b = [Fraction(v) * s for v, s in zip(rhs, signs)]
    supports = []
    for col in columns:
        adj = [s * Fraction(v) for s, v in zip(signs, col)]
        supports.append(_support(adj))

    # artificial j (0..m-1) is real column index n_real + j; basis starts
    # as the artificial identity
    basis = [n_real + i for i in range(m)]
    in_basis = set(basis)
    binv = [[ONE if i == j else ZERO for j in range(m)] for i in range(m)]
    xb = list(b)

    def column_of(j):
        if j < n_real:
            return supports[j]
        i = j - n_real
        return ((i,), (), ())

    while True:
        # simplex multipliers y = c_B B^{-1}
        y = [ZERO] * m
        for k, bj in enumerate(basis):
            if bj >= n_real:
                for i in range(m):
                    y[i] += binv[k][i]

        # pricing only needs signs, so scale y to integers once and scan
        # with machine arithmetic; Bland's rule = first negative index
        scale = 1
        for v in y:
            scale = scale * v.denominator // math.gcd(scale, v.denominator)
        y_int = [int(v * scale) for v in y]

        entering = -1
        for j in range(n_real):
            if j in in_basis:
                continue
            pos, neg, other = supports[j]
            s = 0
            for i in pos:
                s += y_int[i]
            for i in neg:
                s -= y_int[i]
            if other:
                s = Fraction(s) + sum(y[i] * v for i, v in other) * scale
            if s > 0:  # reduced cost 0 - y.A_j < 0
                entering = j
                break
        if entering < 0:
            for j in range(n_real, n_real + m):
                if j in in_basis:
                    continue
                if scale - y_int[j - n_real] < 0:  # reduced cost 1 - y_i < 0
                    entering = j
                    break

        if entering < 0:
            objective = sum(xb[k] for k, bj in enumerate(basis) if bj >= n_real)
            if objective == 0:
                sol = {}
                for k, bj in enumerate(basis):
                    if bj < n_real and xb[k] != 0:
                        sol[bj] = xb[k]
                return Feasible(sol)
            y_orig = tuple(y[i] * signs[i] for i in range(m))
            return Infeasible(y_orig)

        # direction d = B^{-1} A_entering
        pos, neg, other = column_of(entering)
        d = [ZERO] * m
        for k in range(m):
            row = binv[k]
            s = ZERO
            for i in pos:
                s += row[i]
            for i in neg:
                s -= row[i]
            for i, v in other:
                s += row[i] * v
            d[k] = s

        leaving = -1
        best = None
        for k in range(m):
            if d[k] > 0:
                ratio = xb[k] / d[k]
                if best is None or ratio < best or (ratio == best and basis[k] < basis[leaving]):
                    best = ratio
                    leaving = k
        if leaving < 0:
            raise LPError("unbounded direction in a bounded-below phase-one problem")

        piv = d[leaving]
        xb[leaving] = xb[leaving] / piv
        binv[leaving] = [v / piv for v in binv[leaving]]
        for k in range(m):
            if k != leaving and d[k] != 0:
                f = d[k]
                xb[k] -= f * xb[leaving]
                rowl = binv[leaving]
                rowk = binv[k]
                binv[k] = [rowk[i] - f * rowl[i] for i in range(m)]
        in_basis.discard(basis[leaving])
        basis[leaving] = entering
        in_basis.add(entering)
