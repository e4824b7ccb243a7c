"""Finitely supported probability measures with exact rational weights."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .groups import Group, GroupSubset


class MeasureError(ValueError):
    pass


def _normalize(weights):
    total = sum(weights.values(), Fraction(0))
    if total != 1:
        raise MeasureError(f"weights sum to {total}, not 1")
    items = tuple(sorted((p, Fraction(w)) for p, w in weights.items() if w != 0))
    if any(w < 0 for _, w in items):
        raise MeasureError("negative weight")
    return items


@dataclass(frozen=True)
class FinSuppMeasure:
    """Probability measure on a Group (or an abstract indexed point set when
    carrier is None). Structural equality holds after normalization."""

    carrier: Group | None
    entries: tuple  # sorted ((point, Fraction), ...), all weights > 0

    def weight(self, point):
        for p, w in self.entries:
            if p == point:
                return w
        return Fraction(0)

    def support(self):
        return [p for p, _ in self.entries]

    def measure_of(self, points):
        members = points.members if isinstance(points, GroupSubset) else set(points)
        return sum((w for p, w in self.entries if p in members), Fraction(0))

    def to_json(self):
        carrier = self.carrier.label if self.carrier is not None else None
        return json.dumps(
            {"carrier": carrier, "entries": [[p, f"{w.numerator}/{w.denominator}"] for p, w in self.entries]}
        )


def measure(carrier, weights):
    return FinSuppMeasure(carrier, _normalize(dict(weights)))


def dirac(x, carrier=None):
    return FinSuppMeasure(carrier, ((x, Fraction(1)),))


def uniform_on(points, carrier=None):
    if isinstance(points, GroupSubset):
        carrier = points.group
        points = points.indices()
    points = sorted(set(points))
    if not points:
        raise MeasureError("uniform_on requires a nonempty set")
    w = Fraction(1, len(points))
    return FinSuppMeasure(carrier, tuple((p, w) for p in points))


def haar_uniform(group):
    """Uniform measure on a finite group; the unique invariant measure."""
    return uniform_on(range(group.order), carrier=group)


def convolve(mu, nu):
    if mu.carrier is None or mu.carrier is not nu.carrier:
        raise MeasureError("convolution requires a common group carrier")
    g = mu.carrier
    out = {}
    for a, wa in mu.entries:
        for b, wb in nu.entries:
            p = g.mul(a, b)
            out[p] = out.get(p, Fraction(0)) + wa * wb
    return measure(g, out)


def pushforward(hom, mu):
    out = {}
    for p, w in mu.entries:
        q = hom.apply(p)
        out[q] = out.get(q, Fraction(0)) + w
    return measure(hom.target, out)


def measure_of(mu, a):
    return mu.measure_of(a)


def sup_translates(mu, a, pattern="two-sided"):
    """Maximum of mu over translates of A, with the lexicographically least
    maximizing translate pair.

    pattern: "two-sided" (xAy), "left" (xA), "right" (Ay).
    """
    g = mu.carrier
    if g is None:
        raise MeasureError("sup_translates requires a group carrier")
    t = g.table
    members = a.members
    best = Fraction(-1)
    arg = None
    if pattern == "two-sided":
        for x in g.elements():
            for y in g.elements():
                v = sum((w for p, w in mu.entries if p in
                         {t[t[x][q]][y] for q in members}), Fraction(0))
                if v > best:
                    best, arg = v, (x, y)
    elif pattern == "left":
        for x in g.elements():
            xa = {t[x][q] for q in members}
            v = sum((w for p, w in mu.entries if p in xa), Fraction(0))
            if v > best:
                best, arg = v, (x,)
    elif pattern == "right":
        for y in g.elements():
            ay = {t[q][y] for q in members}
            v = sum((w for p, w in mu.entries if p in ay), Fraction(0))
            if v > best:
                best, arg = v, (y,)
    else:
        raise MeasureError(f"unknown pattern {pattern!r}")
    return best, arg
