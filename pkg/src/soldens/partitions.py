"""Covering numbers, packing indices, partition theorems, the odd-group
characterization, and iterated difference-set subgroups on small finite
groups. Everything exact; sizes are guarded, not truncated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import groups as gr


class PartitionError(ValueError):
    pass


class SizeGuardError(PartitionError):
    pass


def cov(group, a):
    """(minimal |F| with F*A = G, lexicographically least optimal F)."""
    if not a.members:
        raise PartitionError("cov of an empty set")
    n = group.order
    masks = [frozenset(gr.left_translate(group, x, a).members) for x in range(n)]
    full = frozenset(range(n))
    best = None

    def search(chosen, covered, start):
        nonlocal best
        if covered == full:
            cand = sorted(chosen)
            if best is None or (len(cand), cand) < (len(best), best):
                best = cand
            return
        if best is not None and len(chosen) + 1 > len(best):
            return
        # branch on the least uncovered point: some translate must grab it
        missing = min(full - covered)
        for x in range(n):
            if missing in masks[x] and x not in chosen:
                search(chosen + [x], covered | masks[x], 0)

    search([], frozenset(), 0)
    return len(best), tuple(sorted(best))


def _trivial_ideal(members):
    return len(members) == 0


def delta_I_finite(group, a, ideal=_trivial_ideal):
    """Shifts x with A intersect xA outside the ideal; with the trivial ideal
    this is exactly A A^-1."""
    out = set()
    for x in group.elements():
        inter = a.members & gr.left_translate(group, x, a).members
        if not ideal(inter):
            out.add(x)
    result = gr.subset(group, out)
    if ideal is _trivial_ideal and a.members:
        if result.members != gr.difference_set(group, a).members:
            raise PartitionError("delta with trivial ideal must equal AA^-1")
    return result


def pack(group, a, ideal=_trivial_ideal):
    """(maximal number of translates xA pairwise intersecting inside the
    ideal, lexicographically least optimal E). Exact branch and bound on the
    conflict graph."""
    if not a.members:
        raise PartitionError("pack of an empty set")
    n = group.order
    if n > 24:
        raise SizeGuardError("pack guarded to |G| <= 24")
    masks = [frozenset(gr.left_translate(group, x, a).members) for x in range(n)]
    conflict = [
        frozenset(y for y in range(n) if y != x and not ideal(masks[x] & masks[y]))
        for x in range(n)
    ]
    best = []

    def search(chosen, candidates):
        nonlocal best
        if len(chosen) + len(candidates) <= len(best):
            return
        if not candidates:
            if len(chosen) > len(best) or (len(chosen) == len(best) and chosen < best):
                best = list(chosen)
            return
        x = min(candidates)
        search(chosen + [x], [y for y in candidates if y > x and y not in conflict[x]])
        search(chosen, [y for y in candidates if y > x])

    search([], list(range(n)))
    return len(best), tuple(best)


def ipack(group, a, ideal):
    return pack(group, a, ideal)[0]


def verify_prop122(group):
    """cov(AA^-1) <= pack(A) <= floor(|G|/|A|) for every nonempty A."""
    if group.order > 10:
        raise SizeGuardError("exhaustive subsets guarded to |G| <= 10")
    tight = []
    for bits in range(1, 2 ** group.order):
        a = gr.subset(group, [i for i in range(group.order) if bits >> i & 1])
        c, _ = cov(group, gr.difference_set(group, a))
        p, _ = pack(group, a)
        cap = group.order // len(a)
        if not c <= p <= cap:
            raise PartitionError(
                f"chain broken on {a.indices()}: cov={c}, pack={p}, cap={cap}"
            )
        if p == cap and cap > 1:
            tight.append((a.indices(), c, p, cap))
    return {"group": group.label, "checked": 2 ** group.order - 1, "tight": tight}


def thm139_bound(n):
    """max over 1 <= k <= n of sum_{i=0}^{n-k} k^i."""
    return max(sum(k ** i for i in range(n - k + 1)) for k in range(1, n + 1))


def _partitions_into(n_elems, max_cells):
    """All partitions of range(n_elems) into <= max_cells nonempty cells,
    canonical up to relabeling (restricted growth strings)."""

    def grow(assign, used):
        i = len(assign)
        if i == n_elems:
            yield assign
            return
        for c in range(min(used + 1, max_cells)):
            yield from grow(assign + [c], max(used, c + 1))

    for assign in grow([], 0):
        cells = [[] for _ in range(max(assign) + 1)]
        for i, c in enumerate(assign):
            cells[c].append(i)
        yield cells


@dataclass(frozen=True)
class PartitionVerdict:
    group_label: str
    cells_max: int
    bound: int
    passed: bool
    partitions_checked: int
    worst_partition: tuple  # cells as index tuples
    worst_best_cov: int

    def to_json(self):
        return json.dumps(
            {
                "group": self.group_label,
                "n": self.cells_max,
                "bound": self.bound,
                "pass": self.passed,
                "checked": self.partitions_checked,
                "worst_partition": [list(c) for c in self.worst_partition],
                "worst_best_cov": self.worst_best_cov,
            }
        )


def _verify_partition_bound(group, n, bound):
    if n > 4 or group.order > 8:
        raise SizeGuardError("partition scan guarded to n <= 4, |G| <= 8")
    worst = None
    worst_val = -1
    checked = 0
    for cells in _partitions_into(group.order, n):
        checked += 1
        best_cov = min(
            cov(group, gr.difference_set(group, gr.subset(group, cell)))[0]
            for cell in cells
        )
        if best_cov > worst_val:
            worst_val = best_cov
            worst = tuple(tuple(c) for c in cells)
    passed = worst_val <= bound
    if not passed:
        raise PartitionError(
            f"partition {worst} has every cov(A A^-1) > {bound} on {group.label}"
        )
    return PartitionVerdict(group.label, n, bound, passed, checked, worst, worst_val)


def verify_thm137(group, n):
    return _verify_partition_bound(group, n, n)


def verify_thm139(group, n):
    return _verify_partition_bound(group, n, thm139_bound(n))


def protasov_search(group, n):
    """Hunt for a partition where every cell has cov(A A^-1) > n. Expected
    empty on finite groups; a hit would be a loud surprise worth publishing,
    so it is returned with full certificates instead of raising."""
    if n > 4 or group.order > 8:
        raise SizeGuardError("partition scan guarded to n <= 4, |G| <= 8")
    for cells in _partitions_into(group.order, n):
        covs = [cov(group, gr.difference_set(group, gr.subset(group, cell))) for cell in cells]
        if all(c > n for c, _ in covs):
            return {"counterexample": [list(c) for c in cells], "covs": covs}
    return None


def is_odd_group(group):
    """Every element has odd order."""
    for g in group.elements():
        k, x = 1, g
        while x != 0:
            x = group.mul(x, g)
            k += 1
        if k % 2 == 0:
            return False
    return True


def odd_group_check(group):
    """Oddness is equivalent to: every 2-partition has a cell whose
    difference set is the whole group. Checked exhaustively."""
    if group.order > 16:
        raise SizeGuardError("2-partition scan guarded to |G| <= 16")
    odd = is_odd_group(group)
    witness = None
    full = frozenset(group.elements())
    for bits in range(1, 2 ** (group.order - 1)):
        a = gr.subset(group, [i for i in range(group.order) if bits >> i & 1])
        b = a.complement()
        if not b.members:
            continue
        da = gr.difference_set(group, a).members
        db = gr.difference_set(group, b).members
        if da != full and db != full:
            witness = (a.indices(), b.indices())
            break
    property_holds = witness is None
    if odd != property_holds:
        raise PartitionError(
            f"oddness ({odd}) disagrees with the partition property ({property_holds})"
        )
    return {"group": group.label, "odd": odd, "property_holds": property_holds, "witness": witness}


def difference_power_subgroup(group, a, n):
    """Iterate D -> D*D from D = A A^-1 until stable; for |A|/|G| >= 1/n the
    limit is a subgroup of index <= n reached at exponent <= 4^(n-1)."""
    if not a.members or Fraction(len(a), group.order) < Fraction(1, n):
        raise PartitionError("density precondition |A|/|G| >= 1/n violated")
    d = gr.difference_set(group, a)
    exponent = 1
    while True:
        nxt = gr.product_set(group, d, d)
        if nxt.members == d.members:
            break
        d = nxt
        exponent *= 2
    if exponent > 4 ** (n - 1):
        raise PartitionError(f"stabilized only at exponent {exponent}")
    if not gr.is_subgroup(group, d):
        raise PartitionError("stabilized set is not a subgroup")
    index = gr.index_of(group, d)
    if index > n:
        raise PartitionError(f"index {index} exceeds {n}")
    closure = gr.subgroup_generated(group, gr.difference_set(group, a))
    if closure.members != d.members:
        raise PartitionError("stabilized set differs from the generated subgroup")
    return d, exponent, index


def thm43_search(group, a):
    """cov-optimal F for A A^-1 with the density cardinality bound."""
    if not a.members:
        raise PartitionError("empty set")
    size, f = cov(group, gr.difference_set(group, a))
    cap = group.order // len(a)
    if size > cap:
        raise PartitionError(f"|F| = {size} exceeds the density bound {cap}")
    return {"f": f, "size": size, "cap": cap, "tight": size == cap}
