"""Invariant densities on finite groups: closed form, brute-force witness
search, bound certificates, subadditivization, and relative densities.

On a finite group all five density kinds collapse to |A|/|G|; the brute-force
search exists as an independent oracle for that closed form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from . import groups as gr
from . import measures as ms


class DensityError(ValueError):
    pass


class DensityKind(Enum):
    SIGMA = "sigma"            # two-sided translates
    SIGMA_L = "sigma_l"        # left translates, measure witnesses
    SIGMA_CAP_L = "sigma_cap_l"  # left translates, uniform witnesses
    SIGMA_R = "sigma_r"        # right translates, measure witnesses
    SIGMA_CAP_R = "sigma_cap_r"  # right translates, uniform witnesses

    @property
    def pattern(self):
        return {
            DensityKind.SIGMA: "two-sided",
            DensityKind.SIGMA_L: "left",
            DensityKind.SIGMA_CAP_L: "left",
            DensityKind.SIGMA_R: "right",
            DensityKind.SIGMA_CAP_R: "right",
        }[self]


ALL_KINDS = tuple(DensityKind)

EXACT = "EXACT"


def bounded(horizon):
    return f"BOUNDED({horizon})"


@dataclass(frozen=True)
class BoundCertificate:
    """A density bound with the witness that proves it.

    verified_sup is always the recomputed translate supremum of the witness;
    a certificate never stores a bound it did not re-check.
    """

    kind: DensityKind
    direction: str  # "upper" | "lower"
    bound: Fraction
    witness: object  # FinSuppMeasure or sorted tuple of points
    scope: str  # EXACT or BOUNDED(L)
    verified_sup: Fraction

    def __post_init__(self):
        if self.verified_sup != self.bound:
            raise DensityError("certificate bound differs from verified supremum")

    def to_json(self):
        if isinstance(self.witness, ms.FinSuppMeasure):
            witness = json.loads(self.witness.to_json())
        else:
            witness = list(self.witness)
        return json.dumps(
            {
                "kind": self.kind.value,
                "direction": self.direction,
                "bound": f"{self.bound.numerator}/{self.bound.denominator}",
                "witness": witness,
                "scope": self.scope,
                "verified_sup": f"{self.verified_sup.numerator}/{self.verified_sup.denominator}",
            }
        )


def density_closed_form(group, a, kind=DensityKind.SIGMA):
    """|A|/|G|, exact; the same for every kind on a finite group."""
    assert isinstance(kind, DensityKind)
    return Fraction(len(a), group.order)


def _uniform_sup(group, f_indices, a, pattern):
    """Translate supremum of uniform_on(F), computed by counting."""
    t = group.table
    members = a.members
    fset = set(f_indices)
    size = len(fset)
    best = 0
    if pattern == "left":
        for x in group.elements():
            c = sum(1 for q in members if t[x][q] in fset)
            if c > best:
                best = c
    elif pattern == "right":
        for y in group.elements():
            c = sum(1 for q in members if t[q][y] in fset)
            if c > best:
                best = c
    else:
        for x in group.elements():
            for y in group.elements():
                c = sum(1 for q in members if t[t[x][q]][y] in fset)
                if c > best:
                    best = c
    return Fraction(best, size)


def density_bruteforce(group, a, kind=DensityKind.SIGMA, max_witness_size=None):
    """Minimum translate supremum over uniform witnesses F with
    1 <= |F| <= max_witness_size, enumerated by size then lexicographically.

    Stops early once the provable finite-group optimum |A|/|G| is reached, so
    the returned witness is the (size, lex)-least minimizer.
    """
    n = group.order
    if max_witness_size is None:
        max_witness_size = n
    if not 1 <= max_witness_size <= n:
        raise DensityError("max_witness_size out of range")
    if not a.members:
        return Fraction(0), (0,)
    target = density_closed_form(group, a, kind)
    pattern = kind.pattern
    best = None
    best_f = None
    for size in range(1, max_witness_size + 1):
        for f in combinations(range(n), size):
            v = _uniform_sup(group, f, a, pattern)
            if best is None or v < best:
                best, best_f = v, f
                if best == target:
                    return best, best_f
    return best, best_f


def certificate_from_witness(group, a, witness, kind=DensityKind.SIGMA):
    """Upper certificate from a witness measure or finite set on a finite
    group; the complete translate set makes the scope EXACT."""
    if isinstance(witness, ms.FinSuppMeasure):
        mu = witness
    else:
        points = list(witness)
        if not points:
            raise DensityError("empty witness")
        mu = ms.uniform_on(points, carrier=group)
    sup, _ = ms.sup_translates(mu, a, kind.pattern)
    return BoundCertificate(kind, "upper", sup, mu, EXACT, sup)


def certificate_from_translates(kind, witness_mu, translate_sets, scope):
    """Upper certificate for an infinite model: the caller supplies the
    translate enumeration (sets of points) and attests to its completeness
    via the scope tag."""
    if not witness_mu.entries:
        raise DensityError("empty witness")
    sup = Fraction(0)
    for s in translate_sets:
        v = witness_mu.measure_of(s)
        if v > sup:
            sup = v
    return BoundCertificate(kind, "upper", sup, witness_mu, scope, sup)


def combine_certificates(group, a, b, cert_a, cert_b):
    """Union certificate via the convolution of the two witnesses; the stored
    bound is the re-verified supremum, which may beat the sum."""
    if cert_a.kind != cert_b.kind or cert_a.kind != DensityKind.SIGMA:
        raise DensityError("combination requires two sigma certificates")
    wa, wb = cert_a.witness, cert_b.witness
    if not (isinstance(wa, ms.FinSuppMeasure) and isinstance(wb, ms.FinSuppMeasure)):
        raise DensityError("combination requires measure witnesses")
    if wa.carrier is not group or wb.carrier is not group:
        raise DensityError("witness carrier mismatch")
    mu = ms.convolve(wa, wb)
    union = a.union(b)
    sup, _ = ms.sup_translates(mu, union, "two-sided")
    if sup > cert_a.bound + cert_b.bound:
        raise DensityError("combined supremum exceeds the sum of bounds")
    return BoundCertificate(DensityKind.SIGMA, "upper", sup, mu, EXACT, sup)


def subadditivize(density_oracle, a, ground, candidates=None, max_evals=2 ** 20):
    """sup over B of oracle(A | B) ... the least subadditive majorant value
    max_B oracle(A u B) - oracle(B), exhaustive over subsets of `ground`
    unless an explicit candidate family is supplied."""
    ground = sorted(set(ground))
    aset = frozenset(a)
    if candidates is None:
        if 2 ** len(ground) > max_evals:
            raise DensityError("ground too large; pass an explicit candidate family")
        candidates = []
        for size in range(len(ground) + 1):
            candidates.extend(frozenset(c) for c in combinations(ground, size))
    best = None
    for b in candidates:
        b = frozenset(b)
        v = density_oracle(aset | b) - density_oracle(b)
        if best is None or v > best:
            best = v
    return best


def relative_density(group, h, a, kind=DensityKind.SIGMA_CAP_R):
    """Density of A inside the subgroup H, computed in H itself."""
    if not gr.is_subgroup(group, h):
        raise DensityError("relative density requires a subgroup")
    elems = h.indices()
    pos = {g: i for i, g in enumerate(elems)}
    table = [[pos[group.mul(x, y)] for y in elems] for x in elems]
    sub = gr.from_table(table, label=f"{group.label}|H{len(elems)}")
    a_in_h = gr.subset(sub, [pos[g] for g in a.members & h.members])
    return density_closed_form(sub, a_in_h, kind)
