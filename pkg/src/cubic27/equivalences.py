"""The linear model of relations among the 27 curve classes.

Q^27 has one basis vector per line (equivalently, per curve in the
27-sheeted correspondence).  Each of the 45 triangles contributes the 0/1
vector supported on its three lines; the span of those vectors is the
21-dimensional subspace V_tet, and its sum-zero slice is the
20-dimensional relation space R_tet.  Four independent constructions of
the same 20-dimensional subspace are compared as canonical subspaces:

  * V_tet intersected with the sum-zero hyperplane,
  * the kernel of the 7x27 map onto the Picard lattice,
  * the eigenvalue-1 eigenspace of the meeting matrix,
  * the unique survivor of the theorem-assembly filter over the eight
    invariant subspaces of the multiplicity-free decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import decomp, picard, weyl
from .errors import ModelError
from .linalg import QMatrix, Subspace, span

DIM = 27


def basis_vector(i, n=DIM):
    return tuple(Fraction(j == i) for j in range(n))


def all_ones(n=DIM):
    return tuple(Fraction(1) for _ in range(n))


@lru_cache(maxsize=None)
def triangle_vectors():
    """The 45 triangle indicator vectors, in canonical triangle order."""
    vectors = []
    for t in picard.enumerate_triangles():
        v = [Fraction(0)] * DIM
        for i in t.members:
            v[i] = Fraction(1)
        vectors.append(tuple(v))
    return tuple(vectors)


@lru_cache(maxsize=None)
def triangle_matrix():
    return QMatrix(triangle_vectors())


@lru_cache(maxsize=None)
def v_tet():
    """Span of the 45 triangle vectors; its dimension must be 21."""
    s = span(triangle_vectors(), ambient_dim=DIM)
    if s.dim != 21:
        raise ModelError(f"triangle span has dimension {s.dim}, expected 21")
    return s


@lru_cache(maxsize=None)
def sum_zero_hyperplane():
    return QMatrix([[1] * DIM]).kernel()


@lru_cache(maxsize=None)
def r_tet():
    """The relation space: sum-zero slice of V_tet, dimension 20.

    On V_tet the class map factors through the coordinate sum (every
    triangle maps to three times the common degree-0 class), so its kernel
    is exactly the sum-zero part.
    """
    s = v_tet().intersect(sum_zero_hyperplane())
    if s.dim != 20:
        raise ModelError(f"relation space has dimension {s.dim}, expected 20")
    return s


@lru_cache(maxsize=None)
def picard_class_matrix():
    """7x27 matrix whose columns are the line classes."""
    lines = picard.enumerate_lines()
    return QMatrix([[line.cls[r] for line in lines] for r in range(7)])


@lru_cache(maxsize=None)
def picard_class_map_kernel():
    """Kernel of the map onto the Picard lattice; equals r_tet()."""
    m = picard_class_matrix()
    if m.rank() != 7:
        raise ModelError(f"line classes span rank {m.rank()}, expected 7")
    ker = m.kernel()
    if ker.dim != 20:
        raise ModelError(f"Picard-map kernel has dimension {ker.dim}, expected 20")
    return ker


@dataclass(frozen=True)
class LatticeElement:
    """A sum of a subset of the three isotypic subspaces."""

    eigenvalues: tuple  # which components are included, descending
    subspace: Subspace


def permute_vector(v, p):
    """Action of a point permutation on coordinates: (p.v)[p[i]] = v[i]."""
    out = [None] * len(v)
    for i, x in enumerate(v):
        out[p[i]] = x
    return tuple(out)


def is_invariant(subspace, generators):
    return all(
        subspace.contains(permute_vector(row, g))
        for g in generators
        for row in subspace.basis.data
    )


@lru_cache(maxsize=None)
def invariant_subspace_lattice():
    """All 8 sums of subsets of isotypic components, each verified invariant.

    For a multiplicity-free representation these are the only invariant
    subspaces; their dimensions here are 0, 1, 6, 20, 7, 21, 26, 27.
    """
    components = decomp.decompose().components
    generators = weyl.weyl_group().generators
    elements = []
    for r in range(len(components) + 1):
        for subset in combinations(components, r):
            s = span([], ambient_dim=DIM)
            for comp in subset:
                s = s + comp.subspace
            if not is_invariant(s, generators):
                raise ModelError(
                    "subset sum "
                    f"{[c.eigenvalue for c in subset]} is not W-invariant"
                )
            elements.append(
                LatticeElement(tuple(c.eigenvalue for c in subset), s)
            )
    if sorted(e.subspace.dim for e in elements) != [0, 1, 6, 7, 20, 21, 26, 27]:
        raise ModelError("invariant lattice has unexpected dimensions")
    return tuple(elements)


#: Filter constraints, in the order the assembly applies them.
CONSTRAINT_NAMES = (
    "contains_relation_space",
    "member_of_invariant_lattice",
    "omits_all_ones_direction",
    "omits_single_curve_difference",
)


def theorem_assembly(use_difference_constraint=True, difference=(0, 1)):
    """Filter the invariant lattice down to the relation space.

    Constraints: (a) contains R_tet; (b) lies in the invariant lattice
    (true by construction, recorded for the audit); (c) does not contain
    the all-ones direction; (d) does not contain e_i - e_j for the given
    index pair.  With all four on, exactly one candidate survives and it
    is the 20-dimensional eigenvalue-1 component; with (d) off there are
    exactly two survivors.

    Returns (survivors, audit) where audit records per candidate which
    constraint eliminated it (or None).
    """
    rtet = r_tet()
    ones = all_ones()
    i, j = difference
    diff = tuple(
        Fraction((k == i) - (k == j)) for k in range(DIM)
    )
    survivors = []
    audit = []
    for element in invariant_subspace_lattice():
        eliminated_by = None
        if not element.subspace.contains_subspace(rtet):
            eliminated_by = CONSTRAINT_NAMES[0]
        elif element.subspace.contains(ones):
            eliminated_by = CONSTRAINT_NAMES[2]
        elif use_difference_constraint and element.subspace.contains(diff):
            eliminated_by = CONSTRAINT_NAMES[3]
        audit.append(
            {
                "eigenvalues": element.eigenvalues,
                "dim": element.subspace.dim,
                "eliminated_by": eliminated_by,
            }
        )
        if eliminated_by is None:
            survivors.append(element)
    return tuple(survivors), tuple(audit)


@lru_cache(maxsize=None)
def theorem_survivor():
    """The unique subspace passing all constraints; must equal r_tet()."""
    survivors, _ = theorem_assembly()
    if len(survivors) != 1:
        raise ModelError(
            f"theorem filter left {len(survivors)} survivors: "
            f"{[s.eigenvalues for s in survivors]}"
        )
    survivor = survivors[0].subspace
    if survivor != r_tet():
        raise ModelError("theorem survivor differs from the relation space")
    return survivor


def corollary_checks():
    """Nonvanishing and pairwise independence of the six-part projections.

    The residual class of curve i modulo the relation space and the common
    degree-0 direction is its image under the eigenvalue -5 projector; the
    report asserts all 27 images are nonzero, all 351 unordered pairs are
    non-proportional, and every triangle vector is annihilated.
    """
    if theorem_survivor() != decomp.decompose().component_by_eigenvalue(1).subspace:
        raise ModelError("corollary precondition failed: survivor is not the 20-part")
    p6 = decomp.decompose().component_by_eigenvalue(-5).projector
    projections = [tuple(row[i] for row in p6.data) for i in range(DIM)]

    zero_failures = [i for i, v in enumerate(projections) if not any(v)]

    def proportional(u, v):
        # u, v nonzero; proportional iff all 2x2 minors vanish
        return all(
            u[a] * v[b] == u[b] * v[a]
            for a in range(DIM)
            for b in range(a + 1, DIM)
        )

    proportional_pairs = [
        (i, j)
        for i, j in combinations(range(DIM), 2)
        if proportional(projections[i], projections[j])
    ]
    triangle_failures = [
        t.members
        for t, v in zip(picard.enumerate_triangles(), triangle_vectors())
        if any(p6.apply(v))
    ]
    return {
        "all_projections_nonzero": not zero_failures,
        "zero_projection_indices": tuple(zero_failures),
        "all_pairs_nonproportional": not proportional_pairs,
        "proportional_pairs": tuple(proportional_pairs),
        "pair_count_checked": DIM * (DIM - 1) // 2,
        "triangles_annihilated": not triangle_failures,
        "triangle_failures": tuple(triangle_failures),
    }


@dataclass(frozen=True)
class TautMonomialBasis:
    monomials: tuple  # (exponent of x1, exponent of x3)
    graded_dims: tuple  # counts by total degree, deg x1 = 1, deg x3 = 3


def taut_ring_basis(max_degree=40):
    """Standard monomials of Q[x1,x3] modulo (x1^6, x3^2, x1^2 x3).

    Brute-force enumeration over an exponent box large enough that the
    three generators cut off everything beyond it.
    """
    monomials = [
        (a, b)
        for a in range(max_degree + 1)
        for b in range(max_degree + 1)
        if a < 6 and b < 2 and not (a >= 2 and b >= 1)
    ]
    monomials.sort(key=lambda m: (m[0] + 3 * m[1], m))
    top = max(a + 3 * b for a, b in monomials)
    graded = [0] * (top + 1)
    for a, b in monomials:
        graded[a + 3 * b] += 1
    return TautMonomialBasis(tuple(monomials), tuple(graded))
