"""Exact zero-sum matrix games: minimax densities, intersection numbers, the
extremal-density hierarchy, and windowed upper bounds for infinite models.

Row player minimizes, column player maximizes, everywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import densities as dn
from . import groups as gr
from . import measures as ms
from .simplex import solve_lp_max


class GameError(ValueError):
    pass


@dataclass(frozen=True)
class MatrixGame:
    payoff: tuple  # tuple of row tuples of Fractions

    def __post_init__(self):
        if not self.payoff or not self.payoff[0]:
            raise GameError("empty payoff matrix")

    @property
    def rows(self):
        return len(self.payoff)

    @property
    def cols(self):
        return len(self.payoff[0])

    def to_json(self):
        return json.dumps(
            {
                "rows": self.rows,
                "cols": self.cols,
                "payoff": [[f"{Fraction(v).numerator}/{Fraction(v).denominator}" for v in row] for row in self.payoff],
            }
        )

    @staticmethod
    def from_json(text):
        data = json.loads(text)
        return game([[Fraction(v) for v in row] for row in data["payoff"]])


def game(rows):
    return MatrixGame(tuple(tuple(Fraction(v) for v in row) for row in rows))


@dataclass(frozen=True)
class GameSolution:
    value: Fraction
    row_strategy: ms.FinSuppMeasure  # over row indices
    col_strategy: ms.FinSuppMeasure  # over column indices

    def to_json(self):
        return json.dumps(
            {
                "value": f"{self.value.numerator}/{self.value.denominator}",
                "row_strategy": json.loads(self.row_strategy.to_json()),
                "col_strategy": json.loads(self.col_strategy.to_json()),
            }
        )


def solve_game(g):
    """Exact value and both optimal strategies, verified against the
    minimax inequalities before returning."""
    m, n = g.rows, g.cols
    shift = 1 - min(min(row) for row in g.payoff)
    shifted = [[g.payoff[i][j] + shift for j in range(n)] for i in range(m)]
    # Row player's LP in normalized form: maximize sum(x) s.t. M^T x <= 1.
    a_rows = [[shifted[i][j] for i in range(m)] for j in range(n)]
    objective, x, duals = solve_lp_max([Fraction(1)] * m, a_rows, [Fraction(1)] * n)
    if objective <= 0:
        raise GameError("degenerate LP objective")
    shifted_value = 1 / objective
    row_strategy = ms.measure(None, {i: x[i] * shifted_value for i in range(m) if x[i] != 0})
    col_strategy = ms.measure(None, {j: duals[j] * shifted_value for j in range(n) if duals[j] != 0})
    value = shifted_value - shift
    for j in range(n):
        if sum(row_strategy.weight(i) * g.payoff[i][j] for i in range(m)) > value:
            raise GameError("row strategy fails its guarantee")
    for i in range(m):
        if sum(col_strategy.weight(j) * g.payoff[i][j] for j in range(n)) < value:
            raise GameError("column strategy fails its guarantee")
    return GameSolution(value, row_strategy, col_strategy)


def intersection_number(family, universe=None):
    """Kelley intersection number of a finite family of sets: the value of
    the game (family member vs point, membership payoff)."""
    family = [frozenset(b) for b in family]
    if not family:
        raise GameError("empty family")
    if universe is None:
        universe = set().union(*family)
    points = sorted(universe)
    if not points:
        return Fraction(0)
    payoff = [[Fraction(1) if p in b else Fraction(0) for p in points] for b in family]
    return solve_game(game(payoff)).value


def sigma_R_via_game(group, a):
    """Right density via the shift game, cross-checked against the transposed
    maximin game; both values must agree exactly (LP duality)."""
    n = group.order
    if not a.members:
        zero = Fraction(0)
        trivial = solve_game(game([[zero]]))
        return zero, trivial, trivial
    payoff = [
        [Fraction(1) if group.mul(g, y) in a.members else Fraction(0) for y in range(n)]
        for g in range(n)
    ]
    minimax = solve_game(game(payoff))
    transposed = [
        [Fraction(1) if g in gr.left_translate(group, x, a).members else Fraction(0) for g in range(n)]
        for x in range(n)
    ]
    maximin = solve_game(game(transposed))
    if minimax.value != maximin.value:
        raise GameError("minimax and maximin values disagree")
    return minimax.value, minimax, maximin


def sigma_via_game(group, a):
    """Two-sided density via the game with columns deduplicated by the
    translate they induce; asserted equal to the closed form."""
    n = group.order
    if not a.members:
        return Fraction(0)
    columns = {}
    for x in range(n):
        for y in range(n):
            tr = gr.translate(group, a, group.inverse[x], group.inverse[y])
            columns.setdefault(tr.members, None)
    cols = sorted(columns, key=sorted)
    payoff = [[Fraction(1) if g in c else Fraction(0) for c in cols] for g in range(n)]
    value = solve_game(game(payoff)).value
    expected = dn.density_closed_form(group, a)
    if value != expected:
        raise GameError("sigma game value differs from closed form")
    return value


@dataclass(frozen=True)
class ExtremalPattern:
    """Quantifier word over {i, s, I, S} (capitals range over all measures,
    at most one allowed) plus a substitution fixing the convolution order."""

    quantifiers: str
    substitution: tuple

    def __post_init__(self):
        n = len(self.quantifiers)
        if n < 1:
            raise GameError("empty pattern")
        if any(q not in "isIS" for q in self.quantifiers):
            raise GameError("quantifiers must be drawn from i, s, I, S")
        if sum(1 for q in self.quantifiers if q in "IS") > 1:
            raise GameError("at most one capital quantifier")
        if sorted(self.substitution) != list(range(1, n + 1)):
            raise GameError("substitution must be a permutation of 1..n")

    @staticmethod
    def parse(text):
        head = "".join(c for c in text if c in "isIS")
        tail = text[len(head):]
        return ExtremalPattern(head, tuple(int(c) for c in tail))

    def kinds(self):
        return self.quantifiers.lower()


def _word_product(group, elems, substitution):
    prod = 0
    for pos in substitution:
        prod = group.mul(prod, elems[pos - 1])
    return prod


def _tuples(group, k):
    out = [()]
    for _ in range(k):
        out = [t + (g,) for t in out for g in group.elements()]
    return out


def _pure_payoff(group, a, pattern, assignment):
    return Fraction(1) if _word_product(group, assignment, pattern.substitution) in a.members else Fraction(0)


def _blocks(kinds):
    blocks = []
    for i, k in enumerate(kinds):
        if blocks and blocks[-1][0] == k:
            blocks[-1][1].append(i)
        else:
            blocks.append((k, [i]))
    return blocks


def eval_extremal(pattern, group, a):
    """Evaluate an extremal density of length <= 3 on a finite group.

    Returns ("exact", value) when the pattern collapses to a single matrix
    game (at most one alternation); mixed patterns are then asserted to pin
    to |A|/|G|. Patterns with two alternations return
    ("interval", (lo, hi)) from candidate-strategy bounds.
    """
    n = len(pattern.quantifiers)
    if n > 3:
        raise GameError("patterns longer than 3 are unsupported")
    kinds = pattern.kinds()
    if "s" not in kinds:
        return "exact", Fraction(1) if len(a) == group.order else Fraction(0)
    if "i" not in kinds:
        return "exact", Fraction(1) if a.members else Fraction(0)

    blocks = _blocks(kinds)
    uniform_value = dn.density_closed_form(group, a)
    if len(blocks) == 2:
        outer_kind, outer_idx = blocks[0]
        _, inner_idx = blocks[1]
        outer = _tuples(group, len(outer_idx))
        inner = _tuples(group, len(inner_idx))

        def payoff(o, v):
            elems = [0] * n
            for q, g in zip(outer_idx, o):
                elems[q] = g
            for q, g in zip(inner_idx, v):
                elems[q] = g
            return _pure_payoff(group, a, pattern, elems)

        if outer_kind == "i":
            payload = [[payoff(o, v) for v in inner] for o in outer]
        else:
            payload = [[payoff(o, v) for o in outer] for v in inner]
        value = solve_game(game(payload)).value
        if value != uniform_value:
            raise GameError("mixed pattern failed the uniform collapse")
        return "exact", value

    # Three alternating blocks: certified interval only.
    q0, q1, q2 = 0, 1, 2
    candidates = [ms.dirac(g, group) for g in group.elements()] + [ms.haar_uniform(group)]

    def expect(mu, fixed_q, g_other, g_inner):
        total = Fraction(0)
        for h, w in mu.entries:
            elems = [0] * 3
            elems[fixed_q] = h
            other_q = q1 if fixed_q == q0 else q0
            elems[other_q] = g_other
            elems[q2] = g_inner
            total += w * _pure_payoff(group, a, pattern, elems)
        return total

    def two_block_value(mu_outer):
        # Remaining middle-vs-inner game with the outer measure folded in.
        payload = [
            [expect(mu_outer, q0, g1, g2) for g2 in group.elements()]
            for g1 in group.elements()
        ]
        if kinds[q1] == "s":
            payload = [list(col) for col in zip(*payload)]
        return solve_game(game(payload)).value

    def pure_sweep(mu_mid, optimum):
        vals = [
            expect(mu_mid, q1, g0, g2)
            for g0 in group.elements()
            for g2 in group.elements()
        ]
        return optimum(vals)

    if kinds[q0] == "s":
        lo = max(two_block_value(c) for c in candidates)
        hi = min(pure_sweep(c, max) for c in candidates)
    else:
        hi = min(two_block_value(c) for c in candidates)
        lo = max(pure_sweep(c, min) for c in candidates)
    if lo > hi:
        raise GameError("interval bounds crossed")
    return "interval", (lo, hi)


def windowed_bound(kind, window_points, translate_sets, attestation, horizon=None):
    """Upper BoundCertificate from the game restricted to a finite witness
    window, valid whenever the supplied translate enumeration is complete
    (structural attestation) or complete up to a horizon."""
    window = sorted(set(window_points))
    if not window:
        raise GameError("empty window")
    cols = [frozenset(s) for s in translate_sets]
    if not cols:
        raise GameError("no translates supplied")
    payoff = [[Fraction(1) if p in c else Fraction(0) for c in cols] for p in window]
    sol = solve_game(game(payoff))
    witness = ms.measure(None, {window[i]: sol.row_strategy.weight(i) for i in range(len(window))
                                if sol.row_strategy.weight(i) != 0})
    scope = dn.EXACT if attestation == "structural" else dn.bounded(horizon)
    cert = dn.certificate_from_translates(kind, witness, cols, scope)
    if cert.bound != sol.value:
        raise GameError("verified supremum differs from game value")
    return cert
