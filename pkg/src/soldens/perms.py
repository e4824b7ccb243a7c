"""Finitely supported permutations of the natural numbers and the
conjugation trick that pushes any finite set of them into a prescribed
infinite target domain.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class PermError(ValueError):
    pass


@dataclass(frozen=True)
class FinSuppPermutation:
    """Identity off a finite domain; mapping stored only on non-fixed points."""

    mapping: tuple  # sorted ((x, f(x)), ...) with f(x) != x

    def __call__(self, x):
        for a, b in self.mapping:
            if a == x:
                return b
        return x

    def support(self):
        return tuple(a for a, _ in self.mapping)

    def __repr__(self):
        return f"perm({dict(self.mapping)})"

    def cycles(self):
        seen = set()
        out = []
        for a, _ in self.mapping:
            if a in seen:
                continue
            cyc = [a]
            seen.add(a)
            x = self(a)
            while x != a:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return tuple(out)

    def to_json(self):
        return json.dumps({"cycles": [list(c) for c in self.cycles()]})

    @staticmethod
    def from_json(text):
        data = json.loads(text)
        mapping = {}
        for cyc in data["cycles"]:
            for i, x in enumerate(cyc):
                mapping[x] = cyc[(i + 1) % len(cyc)]
        return perm(mapping)


def perm(mapping):
    mapping = {x: y for x, y in dict(mapping).items() if x != y}
    if sorted(mapping) != sorted(mapping.values()):
        raise PermError("mapping is not a bijection on its support")
    if any(x < 0 for x in mapping):
        raise PermError("points must be natural numbers")
    return FinSuppPermutation(tuple(sorted(mapping.items())))


IDENTITY = perm({})


def transposition(x, y):
    return perm({x: y, y: x})


def perm_compose(f, g):
    """(f o g)(x) = f(g(x))."""
    points = set(f.support()) | set(g.support())
    return perm({x: f(g(x)) for x in points})


def perm_invert(f):
    return perm({b: a for a, b in f.mapping})


def perm_support(f):
    return f.support()


def perm_conjugate(f, g):
    """f g f^-1; its support is the f-image of supp(g)."""
    result = perm_compose(perm_compose(f, g), perm_invert(f))
    expected = tuple(sorted(f(x) for x in g.support()))
    if result.support() != expected:
        raise PermError("conjugation support identity failed")
    return result


@dataclass(frozen=True)
class TargetPattern:
    """An infinite target domain with decidable membership: either the
    cofinite tail {x >= start} or the residue class {x : x = r (mod m)}."""

    kind: str  # "tail" | "residue"
    start: int = 0
    modulus: int = 1
    residue: int = 0

    def __contains__(self, x):
        if self.kind == "tail":
            return x >= self.start
        if self.kind == "residue":
            return x >= 0 and x % self.modulus == self.residue
        raise PermError(f"unknown pattern kind {self.kind!r}")

    def enumerate(self):
        if self.kind == "tail":
            x = self.start
            while True:
                yield x
                x += 1
        elif self.kind == "residue":
            x = self.residue % self.modulus
            while True:
                yield x
                x += self.modulus
        else:
            raise PermError(f"unknown pattern kind {self.kind!r}")


def tail(start):
    return TargetPattern("tail", start=start)


def residue_class(r, m):
    if m < 1:
        raise PermError("modulus must be >= 1")
    return TargetPattern("residue", modulus=m, residue=r % m)


def conjugation_witness(perms, target):
    """A finitely supported f with supp(f s f^-1) inside the target for every
    s in the given set, built by injecting the joint support into the target
    and pairing off the displaced points."""
    joint = sorted(set().union(*(set(s.support()) for s in perms)) if perms else set())
    if not joint:
        return {"f": IDENTITY, "conjugates": list(perms)}
    if all(x in target for x in joint):
        f = IDENTITY
    else:
        taken = set(joint)
        images = []
        gen = target.enumerate()
        while len(images) < len(joint):
            c = next(gen)
            if c not in taken:
                images.append(c)
        mapping = dict(zip(joint, images))
        # close up into a permutation: each image point not itself moved
        # gets sent back along the chain of preimages
        for c in images:
            if c not in mapping:
                x = c
                while x in mapping.values():
                    x = next(a for a, b in mapping.items() if b == x)
                mapping[c] = x
        f = perm(mapping)
    conjugates = []
    for s in perms:
        c = perm_conjugate(f, s)
        if not all(x in target for x in c.support()):
            raise PermError("conjugate escaped the target domain")
        if len(c.support()) != len(s.support()):
            raise PermError("conjugation changed the support size")
        conjugates.append(c)
    return {"f": f, "conjugates": conjugates}


def solecki_one_witness(perms, target):
    """The witness pair (x, y) = (f, f^-1) translating the finite set into
    the subgroup supported on the target."""
    res = conjugation_witness(perms, target)
    f = res["f"]
    return {"x": f, "y": perm_invert(f), "conjugates": res["conjugates"]}
