"""The Picard lattice Z^{1,6} of a smooth cubic surface.

The lattice carries the intersection pairing of signature (1,-6).  In the
blow-up presentation the 27 exceptional line classes are

    E_i              (0; delta_i)                    i = 1..6
    F_ij = H-E_i-E_j (1; -delta_i - delta_j)         1 <= i < j <= 6
    G_i  = 2H - sum_{j != i} E_j                     i = 1..6

and the global index order is fixed once and for all: E_1..E_6 occupy
indices 0..5, the F_ij in lexicographic order occupy 6..20, and G_1..G_6
occupy 21..26.  Every permutation, matrix and serialized output in the
package is expressed in this order.

Two lines "meet" when their pairing is 1 and are "skew" when it is 0.
Triples of pairwise-meeting lines (triangles) always sum to -K; the code
verifies rather than assumes this.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .errors import ModelError

#: Canonical class K and its negative; -K is the anticanonical class every
#: triangle of lines sums to.
K = (-3, 1, 1, 1, 1, 1, 1)
MINUS_K = (3, -1, -1, -1, -1, -1, -1)
H = (1, 0, 0, 0, 0, 0, 0)


def pairing(u, v):
    """Intersection pairing h_u*h_v - sum_i e_{i,u}*e_{i,v}."""
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


@dataclass(frozen=True)
class Line:
    index: int
    label: str
    cls: tuple


@dataclass(frozen=True)
class Root:
    vec: tuple


@dataclass(frozen=True)
class Triangle:
    members: tuple  # sorted triple of line indices


def _delta(i):
    """Unit e_i coefficient vector, i in 1..6."""
    return tuple(1 if j == i else 0 for j in range(1, 7))


def _labelled_line_classes():
    labelled = []
    for i in range(1, 7):
        labelled.append((f"E{i}", (0,) + _delta(i)))
    for i, j in combinations(range(1, 7), 2):
        cls = (1,) + tuple(-(k == i) - (k == j) for k in range(1, 7))
        labelled.append((f"F{i}{j}", cls))
    for i in range(1, 7):
        labelled.append((f"G{i}", (2,) + tuple(0 if k == i else -1 for k in range(1, 7))))
    return labelled


@lru_cache(maxsize=None)
def enumerate_lines():
    """The 27 lines in the fixed index order, doubly validated.

    The explicit label construction is checked vector-by-vector against the
    exhaustive search of {v : <v,v> = -1, <v,K> = -1} over the coefficient
    box h in [0,2], e_i in [-1,1]; the two sets must coincide.
    """
    labelled = _labelled_line_classes()
    for label, cls in labelled:
        if pairing(cls, cls) != -1 or pairing(cls, K) != -1:
            raise ModelError(f"constructed line {label} = {cls} fails the (-1,-1) conditions")

    searched = set()
    for h in range(0, 3):
        for es in product((-1, 0, 1), repeat=6):
            v = (h,) + es
            if pairing(v, v) == -1 and pairing(v, K) == -1:
                searched.add(v)
    constructed = {cls for _, cls in labelled}
    if constructed != searched:
        raise ModelError(
            "line enumeration mismatch: "
            f"constructed-only {sorted(constructed - searched)}, "
            f"search-only {sorted(searched - constructed)}"
        )
    if len(labelled) != 27:
        raise ModelError(f"expected 27 lines, built {len(labelled)}")
    return tuple(Line(i, label, cls) for i, (label, cls) in enumerate(labelled))


@lru_cache(maxsize=None)
def line_index_by_class():
    return {line.cls: line.index for line in enumerate_lines()}


@lru_cache(maxsize=None)
def enumerate_roots():
    """All 72 roots {v : <v,v> = -2, <v,K> = 0} by exhaustive box search.

    The search runs over the widened box h, e_i in [-3,3] and asserts that
    every hit already lies in the nominal box [-2,2]^7, guarding against an
    under-sized search region.
    """
    roots = []
    for es in product(range(-3, 4), repeat=6):
        s1 = sum(es)
        s2 = sum(e * e for e in es)
        for h in range(-3, 4):
            # <v,v> = h^2 - s2 and <v,K> = -3h - s1
            if h * h - s2 == -2 and 3 * h + s1 == 0:
                v = (h,) + es
                if any(abs(c) > 2 for c in v):
                    raise ModelError(f"root {v} escapes the nominal search box")
                roots.append(v)
    roots.sort()
    if len(roots) != 72:
        raise ModelError(f"expected 72 roots, found {len(roots)}")
    root_set = set(roots)
    for v in roots:
        if tuple(-c for c in v) not in root_set:
            raise ModelError(f"root set not closed under negation at {v}")
    return tuple(Root(v) for v in roots)


@lru_cache(maxsize=None)
def enumerate_triangles():
    """The 45 triangles: unordered triples of pairwise-meeting lines.

    Each triple is verified to sum to -K; a pairwise-meeting triple that
    does not is a model inconsistency.  Output is canonically ordered:
    sorted member triples, listed lexicographically.
    """
    lines = enumerate_lines()
    triangles = []
    for a, b, c in combinations(lines, 3):
        if pairing(a.cls, b.cls) == 1 and pairing(a.cls, c.cls) == 1 and pairing(b.cls, c.cls) == 1:
            total = tuple(x + y + z for x, y, z in zip(a.cls, b.cls, c.cls))
            if total != MINUS_K:
                raise ModelError(
                    f"meeting triple {a.label},{b.label},{c.label} sums to {total}, not -K"
                )
            triangles.append(Triangle((a.index, b.index, c.index)))
    triangles.sort(key=lambda t: t.members)
    if len(triangles) != 45:
        raise ModelError(f"expected 45 triangles, found {len(triangles)}")
    return tuple(triangles)


def reflect(root_vec, x):
    """Reflection in a root: s_r(x) = x + <x,r> r (an involution fixing K)."""
    c = pairing(x, root_vec)
    return tuple(xi + c * ri for xi, ri in zip(x, root_vec))


def line_permutation(root_vec):
    """Images array of the permutation the root's reflection induces on lines."""
    index_of = line_index_by_class()
    images = []
    for line in enumerate_lines():
        image_cls = reflect(root_vec, line.cls)
        j = index_of.get(image_cls)
        if j is None:
            raise ModelError(
                f"reflection in {root_vec} maps line {line.label} to non-line class {image_cls}"
            )
        images.append(j)
    return tuple(images)


#: Simple roots of E6 in the chosen coordinates; the sixth attaches to the
#: third node of the A5 chain.
SIMPLE_ROOTS = (
    (0, 1, -1, 0, 0, 0, 0),
    (0, 0, 1, -1, 0, 0, 0),
    (0, 0, 0, 1, -1, 0, 0),
    (0, 0, 0, 0, 1, -1, 0),
    (0, 0, 0, 0, 0, 1, -1),
    (1, -1, -1, -1, 0, 0, 0),
)


def triangles_through_line(index):
    return tuple(t for t in enumerate_triangles() if index in t.members)
