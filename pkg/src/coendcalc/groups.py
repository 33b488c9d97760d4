"""Finite groups, G-sets and orbit categories."""

import itertools

from .fincat import FinCategory
from .setfun import FinSet, SetValuedFunctor


class FiniteGroup:
    def __init__(self, elements, mult, unit, name="G"):
        self.elements = tuple(elements)
        self.mult = mult
        self.unit = unit
        self.name = name
        self._inv = {g: next(h for h in self.elements if mult(g, h) == unit)
                     for g in self.elements}

    def inv(self, g):
        return self._inv[g]

    def subgroups(self):
        """All subgroups as sorted tuples, smallest first."""
        out = []
        rest = [g for g in self.elements if g != self.unit]
        for r in range(len(rest) + 1):
            for extra in itertools.combinations(rest, r):
                H = {self.unit, *extra}
                if all(self.mult(a, b) in H for a in H for b in H):
                    out.append(self._key(H))
        return out

    def _key(self, S):
        return tuple(g for g in self.elements if g in S)

    def coset(self, a, H):
        """The left coset aH as a sorted tuple."""
        return self._key({self.mult(a, h) for h in H})

    def cosets(self, H):
        seen = []
        for a in self.elements:
            c = self.coset(a, H)
            if c not in seen:
                seen.append(c)
        return seen

    def conjugacy_classes(self):
        seen, out = set(), []
        for x in self.elements:
            if x in seen:
                continue
            cls = self._key({self.mult(self.mult(g, x), self.inv(g)) for g in self.elements})
            seen.update(cls)
            out.append(cls)
        return out

    def center(self):
        return tuple(z for z in self.elements
                     if all(self.mult(z, g) == self.mult(g, z) for g in self.elements))


def cyclic(n):
    return FiniteGroup(range(n), lambda a, b: (a + b) % n, 0, name=f"Z/{n}")


def symmetric(n=3):
    els = list(itertools.permutations(range(n)))
    return FiniteGroup(els, lambda g, f: tuple(g[f[i]] for i in range(n)),
                       tuple(range(n)), name=f"S{n}")


class GSet:
    """A finite left G-set: ``act(g, x)``."""

    def __init__(self, group, elements, act, name="X"):
        self.group = group
        self.elements = FinSet(elements)
        self.act = act
        self.name = name
        G = group
        for x in self.elements:
            if act(G.unit, x) != x:
                raise ValueError("unit does not act trivially")
            for g in G.elements:
                for h in G.elements:
                    if act(G.mult(g, h), x) != act(g, act(h, x)):
                        raise ValueError("action is not associative")

    def fixed(self, H):
        return [x for x in self.elements if all(self.act(h, x) == x for h in H)]


def orbit_category(G):
    """Orb(G): objects are the subgroups H, morphisms G/H → G/K are the
    equivariant maps, recorded as ``(H, K, gK)`` for eH ↦ gK."""
    subs = G.subgroups()
    morphisms = []
    for H in subs:
        for K in subs:
            for gK in G.cosets(K):
                g = gK[0]
                gi = G.inv(g)
                if all(G.mult(G.mult(gi, h), g) in K for h in H):
                    morphisms.append(((H, K, gK), H, K))
    idents = {H: (H, H, G.coset(G.unit, H)) for H in subs}

    def comp(second, first):
        H, _, gK = first
        _, L, hL = second
        return (H, L, G.coset(G.mult(gK[0], hL[0]), L))

    return FinCategory(subs, morphisms, idents, comp, name=f"Orb({G.name})")


def fixed_point_presheaf(X, orb):
    """H ↦ X^H, a functor on Orb(G)^op; eH ↦ gK acts by x ↦ g·x."""
    from .fincat import opposite

    return SetValuedFunctor(opposite(orb), lambda H: X.fixed(H),
                            lambda m, x: X.act(m[2][0], x), check=False,
                            name=f"{X.name}^(−)")


def coset_functor(G, orb):
    """H ↦ G/H, covariant on Orb(G); eH ↦ gK sends aH to agK."""
    return SetValuedFunctor(orb, lambda H: G.cosets(H),
                            lambda m, aH: G.coset(G.mult(aH[0], m[2][0]), m[1]),
                            check=False, name="G/(−)")
