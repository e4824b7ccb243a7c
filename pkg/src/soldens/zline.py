"""Additive combinatorics on eventually periodic subsets of the integers.

A ZSet is a union of residue classes modulo m, corrected by finite add and
remove patches. Everything density-flavored is exact (the patches never move
the upper Banach density); the interval estimator exists to validate the
closed form, not to define it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations


class ZSetError(ValueError):
    pass


EXACT = "EXACT"


def bounded(horizon):
    return f"BOUNDED({horizon})"


@dataclass(frozen=True)
class ZSet:
    m: int
    residues: frozenset
    add: frozenset
    remove: frozenset

    def __contains__(self, x):
        if x in self.add:
            return True
        return x % self.m in self.residues and x not in self.remove

    def patch_span(self):
        pts = self.add | self.remove
        return max((abs(p) for p in pts), default=0)

    def is_periodic(self):
        return not self.add and not self.remove

    def is_finite(self):
        return not self.residues

    def to_json(self):
        return json.dumps(
            {"m": self.m, "residues": sorted(self.residues), "add": sorted(self.add), "remove": sorted(self.remove)}
        )

    @staticmethod
    def from_json(text):
        d = json.loads(text)
        return zset(d["m"], d["residues"], d.get("add", ()), d.get("remove", ()))


def zset(m, residues, add=(), remove=()):
    """Normalized constructor: membership is computed from the raw data and
    the patches are re-derived, so equal sets get equal normal forms."""
    if m < 1:
        raise ZSetError("modulus must be >= 1")
    res = frozenset(r % m for r in residues)
    add, remove = set(add), set(remove)

    def member(x):
        if x in add:
            return True
        return x % m in res and x not in remove

    pts = add | remove
    norm_add = frozenset(x for x in pts if member(x) and x % m not in res)
    norm_remove = frozenset(x for x in pts if not member(x) and x % m in res)
    return ZSet(m, res, norm_add, norm_remove)


def from_integers(points):
    """Finite set of integers as a ZSet."""
    return zset(1, (), add=points)


Z_ALL = zset(1, (0,))
Z_EMPTY = zset(1, ())


def lift(a, new_m):
    if new_m % a.m != 0:
        raise ZSetError("can only lift to a multiple of the modulus")
    res = frozenset(r + k * a.m for r in a.residues for k in range(new_m // a.m))
    return ZSet(new_m, res, a.add, a.remove)


def _common(a, b):
    big = math.lcm(a.m, b.m)
    return lift(a, big), lift(b, big)


def z_equal(a, b):
    la, lb = _common(a, b)
    return (la.residues, la.add, la.remove) == (lb.residues, lb.add, lb.remove)


def z_union(a, b):
    la, lb = _common(a, b)
    res = la.residues | lb.residues
    pts = la.add | la.remove | lb.add | lb.remove
    add = [x for x in pts if x in a or x in b]
    remove = [x for x in pts if not (x in a or x in b)]
    return zset(la.m, res, add, remove)


def z_intersect(a, b):
    la, lb = _common(a, b)
    res = la.residues & lb.residues
    pts = la.add | la.remove | lb.add | lb.remove
    add = [x for x in pts if x in a and x in b]
    remove = [x for x in pts if not (x in a and x in b)]
    return zset(la.m, res, add, remove)


def z_complement(a):
    res = frozenset(range(a.m)) - a.residues
    return zset(a.m, res, add=a.remove, remove=a.add)


def z_shift(a, t):
    res = frozenset((r + t) % a.m for r in a.residues)
    return ZSet(a.m, res, frozenset(p + t for p in a.add), frozenset(p + t for p in a.remove))


def z_negate(a):
    res = frozenset((-r) % a.m for r in a.residues)
    return ZSet(a.m, res, frozenset(-p for p in a.add), frozenset(-p for p in a.remove))


def dstar(a):
    """Upper Banach density: the residue density, exactly. Patches are finite
    and cannot move it."""
    return Fraction(len(a.residues), a.m)


def folner_density(member, depth, start=0):
    """Interval estimate of the density of {x : member(x)} along F_n =
    [start, start + n). Returns (estimate, trace); the estimate is the ratio
    at the deepest level and is a float on purpose: this op is the only
    approximate one in the module."""
    if depth < 1:
        raise ZSetError("depth must be >= 1")
    trace = []
    count = 0
    for n in range(1, depth + 1):
        if member(start + n - 1):
            count += 1
        trace.append((n, count, count / n))
    return trace[-1][2], trace


def _sum_residues(a, b, big):
    """Residues mod `big` of the periodic-plus-add-patch part of a + b."""
    g = math.gcd(a.m, b.m)
    res = set()
    for ra in a.residues:
        for rb in b.residues:
            base = (ra + rb) % g
            res.update(range(base, big, g))
    for p in a.add:
        res.update((p + rb) % b.m + k * b.m for rb in b.residues for k in range(big // b.m))
    for q in b.add:
        res.update((q + ra) % a.m + k * a.m for ra in a.residues for k in range(big // a.m))
    return frozenset(r % big for r in res)


def _sumset_member(a, b, x):
    """Decide x in a + b directly. Any representation through a residue class
    survives the finite removals, so a short scan suffices."""
    big = math.lcm(a.m, b.m)
    span = (len(a.remove) + len(b.remove) + 2) * big
    for p in a.add:
        if (x - p) in b:
            return True
    for q in b.add:
        if (x - q) in a:
            return True
    for y in range(x, x + span):
        if y in a and (x - y) in b:
            return True
    return False


def sumset(a, b, slack=0):
    """(result, scope). Exact when neither input has remove patches; with
    removals the claimed set is checked pointwise on [-H, H] and the scope is
    downgraded to BOUNDED(H)."""
    big = math.lcm(a.m, b.m)
    res = _sum_residues(a, b, big)
    # Points whose only representations run through a patch can deviate from
    # the periodic picture; everything else has a residue-pair route and is
    # immune to finite removals.
    exceptional = {p + q for p in a.add for q in b.add}
    exceptional |= {p + r for p in a.add for r in b.remove}
    exceptional |= {r + q for r in a.remove for q in b.add}
    claimed = zset(big, res,
                   add=[s for s in exceptional if _sumset_member(a, b, s)],
                   remove=[s for s in exceptional if not _sumset_member(a, b, s)])
    if a.is_periodic() and b.is_periodic():
        return claimed, EXACT
    h = max(a.patch_span(), b.patch_span()) + 2 * big + slack
    for x in range(-h, h + 1):
        if (x in claimed) != _sumset_member(a, b, x):
            raise ZSetError(f"sumset window check failed at {x}")
    return claimed, bounded(h)


def difference_set(a, slack=0):
    """a - a, with the same scope discipline as sumset."""
    return sumset(a, z_negate(a), slack=slack)


def delta_eps(a, eps):
    """Shifts x with d*(A intersect (x+A)) >= eps; depends on x mod m only."""
    eps = Fraction(eps)
    if eps <= 0:
        return Z_ALL
    good = [
        x for x in range(a.m)
        if Fraction(len(a.residues & {(r + x) % a.m for r in a.residues}), a.m) >= eps
    ]
    return zset(a.m, good)


def delta_ideal(a):
    """Shifts x with d*(A intersect (x+A)) > 0, as an exact periodic set."""
    good = [x for x in range(a.m) if a.residues & {(r + x) % a.m for r in a.residues}]
    return zset(a.m, good)


def thick_interval(a, length):
    """An explicit interval of the requested length inside A, or None."""
    if len(a.residues) < a.m:
        return None
    start = a.patch_span() + 1
    return (start, start + length)


def large_witness(a):
    """Finite F with F + A = Z, or None. A residue transversal shifted
    |remove| + 1 times survives every finite removal."""
    if not a.residues:
        return None
    r0 = min(a.residues)
    copies = len(a.remove) + 1
    return tuple(sorted(c - r0 + j * a.m for c in range(a.m) for j in range(copies)))


def covers(f, a, window):
    """Check F + A = Z on [-window, window]."""
    return all(any((x - t) in a for t in f) for x in range(-window, window + 1))


def classify(a, witness_length=10):
    """Thick / large / small verdict with explicit witnesses.

    Thick needs full residues; large needs any residue; small means the
    periodic part is empty, so F + A stays finite and never thick.
    """
    thick = len(a.residues) == a.m
    large = bool(a.residues)
    small = not large
    f = large_witness(a)
    if f is not None and not covers(f, a, a.patch_span() + 2 * a.m * (len(a.remove) + 1)):
        raise ZSetError("large witness failed its cover check")
    return {
        "thick": thick,
        "large": large,
        "small": small,
        "thick_witness": thick_interval(a, witness_length) if thick else None,
        "large_witness": f,
    }


def _min_cover(universe_size, base_residues):
    """Lexicographically least minimum set of shifts t with the translates
    t + base covering Z/universe: iterative deepening over the cover size."""
    base = frozenset(base_residues)
    if not base:
        raise ZSetError("cannot cover with an empty base")
    full = frozenset(range(universe_size))
    masks = [frozenset((r + t) % universe_size for r in base) for t in range(universe_size)]
    floor_size = -(-universe_size // len(base))
    for size in range(floor_size, universe_size + 1):
        for shifts in combinations(range(universe_size), size):
            covered = frozenset().union(*(masks[t] for t in shifts))
            if covered == full:
                return shifts
    raise ZSetError("unreachable: all shifts always cover")


def jin_witness(a, b):
    """Minimal F with F + A + B thick, with the density-product cardinality
    bound asserted."""
    da, db = dstar(a), dstar(b)
    if da == 0 or db == 0:
        raise ZSetError("jin witness needs positive densities")
    if not (a.is_periodic() and b.is_periodic()):
        raise ZSetError("jin witness needs exact sumsets (no remove patches)")
    s, scope = sumset(a, b)
    assert scope == EXACT
    f = _min_cover(s.m, s.residues)
    limit = math.ceil(1 / (da * db))
    if len(f) > limit:
        raise ZSetError(f"cover size {len(f)} exceeds the density bound {limit}")
    shifted = Z_EMPTY
    for t in f:
        shifted = z_union(shifted, z_shift(s, t))
    if not classify(shifted)["thick"]:
        raise ZSetError("jin witness failed thickness")
    return {"f": f, "bound": limit, "sumset": s}


def lemma163_check(a, b):
    """Density sum above 1 forces a thick sumset."""
    da, db = dstar(a), dstar(b)
    if da + db <= 1:
        return {"applicable": False, "density_sum": da + db}
    s, scope = sumset(a, b)
    verdict = classify(s)
    if not verdict["thick"]:
        raise ZSetError("density sum exceeds 1 but the sumset is not thick")
    return {"applicable": True, "density_sum": da + db, "sumset": s,
            "scope": scope, "thick_witness": verdict["thick_witness"]}


def ergodic_sup_check(a):
    """sup over finite F of the density of F + A is 0 or 1; returns the value
    with a minimal witness F for the 1-case.

    The minimal |F| is reported against ceil(1/d*) but not asserted: shift
    covers by a sparse residue pattern can genuinely need more translates
    than the density reciprocal (residues {0, 1, 4} mod 9 need 4 > 3).
    """
    if a.is_finite():
        return {"value": 0, "f": None}
    f = _min_cover(a.m, a.residues)
    f = tuple(t + j * a.m for t in f for j in range(len(a.remove) + 1))
    if not covers(f, a, a.patch_span() + 2 * a.m * (len(a.remove) + 1)):
        raise ZSetError("ergodic witness failed its cover check")
    return {"value": 1, "f": f, "reciprocal_bound": math.ceil(1 / dstar(a))}


def bohr_congruence(m, residues):
    """Rational-frequency Bohr set on Z: a union of congruence classes."""
    if not residues:
        raise ZSetError("a nonempty Bohr set needs residues")
    return zset(m, residues)


def piecewise_bohr_check(a):
    """Decompose A above a congruence class: U = r + mZ, T = Z minus the
    removals; U intersect T sits inside A. Refuses finite sets."""
    if not a.residues:
        return {"ok": False, "reason": "finite sets are not piecewise Bohr"}
    r = min(a.residues)
    u = bohr_congruence(a.m, [r])
    t = zset(1, (0,), remove=a.remove)
    span = a.patch_span() + 2 * a.m
    for x in range(-span, span + 1):
        if x in u and x in t and x not in a:
            raise ZSetError(f"Bohr decomposition leaks at {x}")
    return {"ok": True, "u": u, "t": t}


def finitely_embeddable(a, b, depth=None):
    """Every finite prefix of A shifts into B?

    Purely periodic inputs reduce exactly to one residue test; with patches
    the verdict is bounded by the depth horizon.
    """
    big = math.lcm(a.m, b.m)
    la, lb = lift(a, big), lift(b, big)
    if a.is_periodic() and b.is_periodic():
        shifts = [x for x in range(big) if all((r + x) % big in lb.residues for r in la.residues)]
        if not shifts:
            if a.residues:
                return {"embeddable": False, "scope": EXACT,
                        "obstruction": "no residue shift embeds the period"}
            return {"embeddable": True, "scope": EXACT, "shift": 0}
        shift = shifts[0]
        if dstar(a) > dstar(b):
            raise ZSetError("embeddable yet denser; density monotonicity broken")
        da, _ = difference_set(a)
        db, _ = difference_set(b)
        if not z_equal(z_intersect(da, db), da):
            raise ZSetError("embeddable yet A-A escapes B-B")
        return {"embeddable": True, "scope": EXACT, "shift": shift}
    if depth is None:
        depth = 3 * big + a.patch_span()
    prefix = [x for x in range(-depth, depth + 1) if x in a]
    if not prefix:
        return {"embeddable": True, "scope": bounded(depth), "shift": 0}
    span = big * (len(b.remove) + 2) + b.patch_span() + depth + big
    for x in range(-span, span + 1):
        if all((p + x) in b for p in prefix):
            return {"embeddable": True, "scope": bounded(depth), "shift": x}
    return {"embeddable": False, "scope": bounded(depth),
            "obstruction": f"no shift in [-{span}, {span}] fits the depth-{depth} prefix"}


_PRIMES8 = (2, 3, 5, 7, 11, 13, 17, 19)


def _sieve(limit):
    import numpy as np

    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(limit ** 0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags


def primes_bound_table(k_max, verify_horizon=10 ** 6):
    """Primorial density bounds for the primes, with an empirical sieve check
    that no length-n_k window ever holds more than k + 2*phi(n_k) primes."""
    import numpy as np

    if not 1 <= k_max <= 8:
        raise ZSetError("k_max must be in 1..8")
    rows = []
    n = 1
    phi = 1
    horizon_needed = 1
    for k in range(1, k_max + 1):
        p = _PRIMES8[k - 1]
        n *= p
        phi *= p - 1
        horizon_needed = n
    if verify_horizon < horizon_needed:
        raise ZSetError("horizon too small to cover one full window period")
    flags = _sieve(verify_horizon + horizon_needed)
    counts = np.concatenate(([0], np.cumsum(flags.astype(np.int64))))
    n = 1
    phi = 1
    prev_bound = None
    for k in range(1, k_max + 1):
        p = _PRIMES8[k - 1]
        n *= p
        phi *= p - 1
        expected = Fraction(1)
        for q in _PRIMES8[:k]:
            expected *= Fraction(q - 1, q)
        if Fraction(phi, n) != expected:
            raise ZSetError("totient product identity failed")
        bound = Fraction(k + 2 * phi, n)
        if k >= 3 and not bound < prev_bound:
            raise ZSetError("bound sequence stopped decreasing")
        prev_bound = bound
        # max over y < horizon of primes in the window (y, y + n_k]
        window = counts[n : n + verify_horizon] - counts[:verify_horizon]
        empirical = int(window.max())
        if empirical > k + 2 * phi:
            raise ZSetError(f"empirical window count {empirical} beats the bound at k={k}")
        rows.append({"k": k, "n_k": n, "phi": phi, "bound": bound, "empirical_max": empirical})
    return rows


@dataclass(frozen=True)
class BlockSet:
    """One lane of a round-robin schedule of disjoint intervals with strictly
    increasing lengths: block j >= 1 is [j(j-1)/2, j(j-1)/2 + j)."""

    lane: int
    lanes: int

    def block(self, j):
        start = j * (j - 1) // 2
        return (start, start + j)

    def __contains__(self, x):
        if x < 0:
            return False
        j = int((math.isqrt(8 * x + 1) + 1) // 2)
        lo, hi = self.block(j)
        if not lo <= x < hi:
            j -= 1
            lo, hi = self.block(j)
        return lo <= x < hi and (j - 1) % self.lanes == self.lane

    def thick_witness(self, length):
        j = self.lane + 1
        while j < length:
            j += self.lanes
        return self.block(j)


def disjoint_thick_family(n):
    if n < 1:
        raise ZSetError("need at least one lane")
    return [BlockSet(lane, n) for lane in range(n)]


def ip_witness_search(member, k, bound):
    """Generators x1 < ... < xk in [1, bound] whose finite subset-sums all lie
    in the set, found depth-first; None means the search space is exhausted,
    not a nonexistence proof."""
    if not 1 <= k <= 20:
        raise ZSetError("k must be in 1..20")
    if not callable(member):
        zs = member
        member = lambda x: x in zs

    def extend(gens, sums, lo):
        if len(gens) == k:
            return gens
        for x in range(lo, bound + 1):
            if not member(x):
                continue
            if all(member(s + x) for s in sums):
                found = extend(gens + [x], sums + [s + x for s in sums] + [x], x + 1)
                if found:
                    return found
        return None

    found = extend([], [], 1)
    if found is None:
        return {"found": None, "exhausted_bound": bound}
    return {"found": tuple(found), "exhausted_bound": None}
