"""Dense exact-rational simplex for small LPs.

Solves  max c.x  s.t.  A x <= b, x >= 0  with b >= 0, which is all the game
engine ever needs. Bland's rule keeps the pivoting deterministic and free of
cycles.
"""

from __future__ import annotations

from fractions import Fraction


class SimplexError(RuntimeError):
    pass


def solve_lp_max(c, a_rows, b):
    """Returns (objective, x, duals).

    duals[i] is the optimal dual multiplier of constraint i (the reduced cost
    of its slack variable in the final tableau).
    """
    m = len(a_rows)
    n = len(c)
    if any(bi < 0 for bi in b):
        raise SimplexError("requires b >= 0")
    # Tableau rows: [a | slack I | rhs]; objective row holds reduced costs.
    tab = []
    for i in range(m):
        row = [Fraction(v) for v in a_rows[i]]
        row += [Fraction(int(j == i)) for j in range(m)]
        row.append(Fraction(b[i]))
        tab.append(row)
    obj = [Fraction(v) for v in c] + [Fraction(0)] * (m + 1)
    basis = [n + i for i in range(m)]
    width = n + m

    while True:
        # Bland: entering = least-index column with positive reduced cost.
        enter = next((j for j in range(width) if obj[j] > 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][width] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise SimplexError("unbounded LP")
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [v - f * w for v, w in zip(tab[i], tab[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [v - f * w for v, w in zip(obj, tab[leave])]
        basis[leave] = enter

    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = tab[i][width]
    objective = sum(ci * xi for ci, xi in zip(c, x))
    duals = [-obj[n + i] for i in range(m)]
    return objective, x, duals
