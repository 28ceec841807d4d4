"""Permutation-group machinery on the 27 line indices.

Permutations are plain tuples of images; `compose(p, q)` applies q first.
`PermGroup` builds a deterministic base and strong generating set by the
classical Schreier-Sims procedure (no randomization: the groups here are
tiny), certifies it by sifting every Schreier generator, and exposes order,
membership, full element enumeration, orbits and conjugacy classes.

For W(E6) acting on the lines this certifies order 51840 and 25 conjugacy
classes, with the three orbitals equal / meeting / skew on ordered pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import picard
from .errors import ModelError, UnsupportedScaleError


def identity_perm(n):
    return tuple(range(n))


def compose(p, q):
    """(p compose q)(i) = p[q[i]]; q acts first."""
    return tuple(p[i] for i in q)


def inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def is_bijection(p):
    return sorted(p) == list(range(len(p)))


def perm_order(p):
    ident = identity_perm(len(p))
    q = p
    k = 1
    while q != ident:
        q = compose(p, q)
        k += 1
    return k


def cycles(p):
    """Cycle decomposition (fixed points omitted), canonically ordered."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out

def cycle_type(p):
    """Partition of the degree by cycle lengths, sorted descending."""
    lengths = [len(c) for c in cycles(p)]
    fixed = len(p) - sum(lengths)
    return tuple(sorted(lengths + [1] * fixed, reverse=True))


def fixed_points(p):
    return sum(1 for i, j in enumerate(p) if i == j)


@lru_cache(maxsize=None)
def simple_reflection_generators():
    """Line permutations of the six simple-root reflections, in root order."""
    return tuple(picard.line_permutation(r) for r in picard.SIMPLE_ROOTS)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: tuple
    size: int
    cycle_type: tuple


class _Level:
    """One layer of the stabilizer chain: a base point, the strong
    generators fixing all earlier base points, and the orbit transversal
    (coset representative and its inverse per orbit point)."""

    __slots__ = ("point", "gens", "transversal", "inverses")

    def __init__(self, point):
        self.point = point
        self.gens = []
        self.transversal = {}
        self.inverses = {}

    def rebuild(self, gens, degree):
        self.gens = gens
        ident = identity_perm(degree)
        self.transversal = {self.point: ident}
        self.inverses = {self.point: ident}
        queue = [self.point]
        while queue:
            x = queue.pop(0)
            u = self.transversal[x]
            for g in gens:
                y = g[x]
                if y not in self.transversal:
                    rep = compose(g, u)
                    self.transversal[y] = rep
                    self.inverses[y] = inverse(rep)
                    queue.append(y)


class PermGroup:
    """A permutation group with a verified base and strong generating set."""

    def __init__(self, generators, degree=None):
        gens = tuple(tuple(g) for g in generators)
        if not gens:
            raise ValueError("need at least one generator")
        if degree is None:
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree or not is_bijection(g):
                raise ValueError(f"not a permutation of degree {degree}: {g}")
        self.degree = degree
        self.generators = gens
        self._levels = []
        self._element_cache = None
        self._schreier_sims()
        self._verify()

    # -- construction ------------------------------------------------

    def _schreier_sims(self):
        """Deterministic Schreier-Sims with base points in increasing order.

        Levels are verified from the deepest upward; whenever a Schreier
        generator fails to sift, its residue joins the strong generating
        set and verification drops back down to the deepest level the
        residue enters.
        """
        ident = identity_perm(self.degree)
        strong = [g for g in self.generators if g != ident]
        base = []

        def cover(g):
            if all(g[b] == b for b in base):
                base.append(min(i for i, x in enumerate(g) if x != i))
                self._levels.append(_Level(base[-1]))

        for g in strong:
            cover(g)
        if not base:
            return  # trivial group

        def rebuild(i):
            prefix = base[:i]
            gens_i = [g for g in strong if all(g[b] == b for b in prefix)]
            self._levels[i].rebuild(gens_i, self.degree)

        i = len(base) - 1
        while i >= 0:
            rebuild(i)
            residue = self._first_unsiftable_schreier(i)
            if residue is None:
                i -= 1
                continue
            strong.append(residue)
            cover(residue)
            # drop to the deepest level whose generator set gains the residue
            j = 0
            while j < len(base) and residue[base[j]] == base[j]:
                j += 1
            i = min(j, len(base) - 1)

    def _first_unsiftable_schreier(self, level):
        """Residue of the first Schreier generator of this level that fails
        to sift through the chain below, or None if the level is closed."""
        lv = self._levels[level]
        ident = identity_perm(self.degree)
        for x in sorted(lv.transversal):
            u = lv.transversal[x]
            for g in lv.gens:
                schreier = compose(lv.inverses[g[x]], compose(g, u))
                if schreier == ident:
                    continue
                residue, _ = self._sift_residue(schreier, level + 1)
                if residue != ident:
                    return residue
        return None

    def _sift_residue(self, g, start):
        for i in range(start, len(self._levels)):
            lv = self._levels[i]
            x = g[lv.point]
            if x == lv.point:
                continue
            if x not in lv.transversal:
                return g, i
            g = compose(lv.inverses[x], g)
        return g, len(self._levels)

    def _verify(self):
        """Certify the BSGS: every Schreier generator must sift to identity."""
        ident = identity_perm(self.degree)
        for g in self.generators:
            if self.sift(g) != ident:
                raise ModelError("original generator fails to sift through the chain")
        for i in range(len(self._levels)):
            if self._first_unsiftable_schreier(i) is not None:
                raise ModelError("Schreier generator fails to sift: BSGS incomplete")

    # -- queries -----------------------------------------------------

    @property
    def base(self):
        return tuple(lv.point for lv in self._levels)

    @property
    def strong_generators(self):
        seen = []
        for lv in self._levels:
            for g in lv.gens:
                if g not in seen:
                    seen.append(g)
        return tuple(seen)

    @property
    def basic_orbits(self):
        return tuple(tuple(sorted(lv.transversal)) for lv in self._levels)

    @property
    def order(self):
        n = 1
        for lv in self._levels:
            n *= len(lv.transversal)
        return n

    def sift(self, g):
        residue, _ = self._sift_residue(tuple(g), 0)
        return residue

    def __contains__(self, g):
        return self.sift(g) == identity_perm(self.degree)

    def elements(self):
        """All group elements, deterministically ordered, computed once."""
        if self._element_cache is None:
            elems = [identity_perm(self.degree)]
            for lv in reversed(self._levels):
                reps = [lv.transversal[x] for x in sorted(lv.transversal)]
                elems = [compose(u, e) for u in reps for e in elems]
            self._element_cache = tuple(elems)
        return self._element_cache

    def orbits_on_points(self):
        seen = set()
        orbits = []
        for start in range(self.degree):
            if start in seen:
                continue
            orbit = {start}
            queue = [start]
            while queue:
                x = queue.pop(0)
                for g in self.generators:
                    y = g[x]
                    if y not in orbit:
                        orbit.add(y)
                        queue.append(y)
            seen |= orbit
            orbits.append(tuple(sorted(orbit)))
        return tuple(orbits)

    def orbit_count_on_ordered_pairs(self):
        """Number of orbitals of the diagonal action on ordered pairs."""
        seen = set()
        count = 0
        for pair in product(range(self.degree), repeat=2):
            if pair in seen:
                continue
            count += 1
            orbit = {pair}
            queue = [pair]
            while queue:
                a, b = queue.pop(0)
                for g in self.generators:
                    image = (g[a], g[b])
                    if image not in orbit:
                        orbit.add(image)
                        queue.append(image)
            seen |= orbit
        return count

    def conjugacy_classes(self):
        """All conjugacy classes by full element enumeration.

        Elements are closed up under conjugation by the generators
        (union-find); that suffices because conjugation by any group element
        is a word in the generators.  Classes are sorted by the documented
        total order (size, cycle type descending-lex, least representative).
        """
        if self.order > 1_000_000:
            raise UnsupportedScaleError(
                f"order {self.order} exceeds the explicit-enumeration bound 10^6"
            )
        elems = self.elements()
        index = {e: i for i, e in enumerate(elems)}
        parent = list(range(len(elems)))

        def find(i):
            root = i
            while parent[root] != root:
                root = parent[root]
            while parent[i] != root:
                parent[i], i = root, parent[i]
            return root

        gen_pairs = [(g, inverse(g)) for g in self.generators]
        points = range(self.degree)
        for i, e in enumerate(elems):
            for g, ginv in gen_pairs:
                conj = tuple(g[e[ginv[p]]] for p in points)
                ri, rj = find(i), find(index[conj])
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

        members = {}
        for i, e in enumerate(elems):
            members.setdefault(find(i), []).append(e)
        classes = [
            ConjugacyClass(min(group), len(group), cycle_type(min(group)))
            for group in members.values()
        ]
        classes.sort(key=lambda c: (c.size, c.cycle_type, c.representative))
        if sum(c.size for c in classes) != self.order:
            raise ModelError("class equation violated: sizes do not sum to the order")
        for c in classes:
            if self.order % c.size != 0:
                raise ModelError(f"class size {c.size} does not divide the order")
        return tuple(classes)


@lru_cache(maxsize=None)
def weyl_group():
    """W(E6) as a permutation group on the 27 lines (order 51840)."""
    return PermGroup(simple_reflection_generators(), degree=27)


@lru_cache(maxsize=None)
def weyl_classes():
    return weyl_group().conjugacy_classes()
