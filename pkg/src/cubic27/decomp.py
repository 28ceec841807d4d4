"""Isotypic decomposition of the 27-point permutation representation.

The meeting relation of the lines is a strongly regular graph with
parameters (27, 10, 1, 5), so its adjacency matrix has the integer
spectrum 10, 1, -5.  Exact kernel computations give the eigenspace
dimensions 1, 20 and 6, Lagrange interpolation gives exact rational
projectors onto the eigenspaces, and character inner products certify
that each eigenspace is an irreducible subrepresentation of W(E6).
Multiplicity-freeness comes from the orbital count: the inner product
of the permutation character with itself equals the number of orbits
on ordered pairs, which is 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import picard, weyl
from .errors import CertificateFailure, ModelError
from .linalg import QMatrix, Subspace

SRG_PARAMS = (27, 10, 1, 5)


@lru_cache(maxsize=None)
def meeting_matrix():
    """27x27 adjacency matrix of the meeting relation (pairing = 1)."""
    lines = picard.enumerate_lines()
    rows = [
        [1 if picard.pairing(a.cls, b.cls) == 1 else 0 for b in lines]
        for a in lines
    ]
    return QMatrix(rows)


def permutation_matrix(p):
    """0/1 matrix M with M[p[j]][j] = 1, so M acts on columns as p on points."""
    n = len(p)
    rows = [[0] * n for _ in range(n)]
    for j, i in enumerate(p):
        rows[i][j] = 1
    return QMatrix(rows)


@dataclass(frozen=True)
class IsotypicComponent:
    eigenvalue: int
    dimension: int
    projector: QMatrix
    subspace: Subspace
    character: tuple = None  # per-class integer values, attached by decompose()


def spectral_decomposition(a):
    """Eigenspace decomposition of a symmetric integer matrix.

    Candidate eigenvalues are the integers within the Gershgorin bound;
    each is tested by an exact kernel computation.  The eigenspace
    dimensions must sum to the ambient dimension (i.e. the minimal
    polynomial splits over Z), otherwise the input is unsupported.
    Projectors are built by Lagrange interpolation and verified to be
    symmetric idempotents of the right trace.
    """
    n = a.nrows
    if n != a.ncols or not a.is_symmetric():
        raise ValueError("spectral decomposition needs a symmetric square matrix")
    bound = max(
        (sum(abs(x) for x in row) for row in a.data), default=Fraction(0)
    )
    eigen = []
    for lam in range(int(bound), -int(bound) - 1, -1):
        ker = (a - QMatrix.identity(n).scaled(lam)).kernel()
        if ker.dim:
            eigen.append((lam, ker))
    if sum(ker.dim for _, ker in eigen) != n:
        raise ValueError(
            "spectrum is not integral: eigenspace dimensions "
            f"{[k.dim for _, k in eigen]} do not sum to {n}"
        )
    components = []
    for lam, ker in eigen:
        proj = QMatrix.identity(n)
        denom = 1
        for mu, _ in eigen:
            if mu != lam:
                proj = proj * (a - QMatrix.identity(n).scaled(mu))
                denom *= lam - mu
        proj = proj.scaled(Fraction(1, denom))
        if proj * proj != proj:
            raise ModelError(f"projector for eigenvalue {lam} is not idempotent")
        if not proj.is_symmetric():
            raise ModelError(f"projector for eigenvalue {lam} is not symmetric")
        if proj.trace() != ker.dim:
            raise ModelError(
                f"projector trace {proj.trace()} != eigenspace dimension {ker.dim}"
            )
        components.append(IsotypicComponent(lam, ker.dim, proj, ker))
    return tuple(components)


def permutation_character(classes, degree=27):
    """Fixed-point count of each class representative."""
    return tuple(
        Fraction(weyl.fixed_points(c.representative)) for c in classes
    )


def trivial_character(classes):
    return tuple(Fraction(1) for _ in classes)


def inner_product(f1, f2, classes, group_order):
    """Exact character inner product (all characters here are rational)."""
    if not (len(f1) == len(f2) == len(classes)):
        raise ValueError("class-function length mismatch")
    total = sum(
        (Fraction(c.size) * a * b for c, a, b in zip(classes, f1, f2)),
        Fraction(0),
    )
    return total / group_order


def projected_trace(projector, p):
    """trace(projector . M(p)) without forming the product matrix."""
    return sum(
        (projector.data[p[j]][j] for j in range(len(p))), Fraction(0)
    )


def constituent_character(comp, classes):
    """Character of the subrepresentation cut out by the projector.

    Values must be integers; a fractional value would mean the projector
    does not commute with the group action.
    """
    values = tuple(projected_trace(comp.projector, c.representative) for c in classes)
    for c, v in zip(classes, values):
        if v.denominator != 1:
            raise ModelError(
                f"non-integral character value {v} on class of size {c.size}"
            )
    return values


def strongly_regular_certificate(a, params=SRG_PARAMS):
    """Entry-wise check of A^2 = k I + lambda A + mu (J - I - A)."""
    n, k, lam, mu = params
    if a.nrows != n or a.ncols != n:
        return False
    sq = a * a
    for i in range(n):
        for j in range(n):
            if i == j:
                expected = k
            elif a.data[i][j] == 1:
                expected = lam
            else:
                expected = mu
            if sq.data[i][j] != expected:
                return False
    return True


@dataclass(frozen=True)
class Decomposition:
    """Certified decomposition of the permutation representation."""

    components: tuple  # IsotypicComponent, eigenvalue descending
    perm_character: tuple
    dimensions: tuple  # sorted ascending

    def component_by_eigenvalue(self, lam):
        for comp in self.components:
            if comp.eigenvalue == lam:
                return comp
        raise KeyError(lam)


def _require(condition, name, details=""):
    if not condition:
        raise CertificateFailure(name, details)


@lru_cache(maxsize=None)
def decompose():
    """Decompose Q^27 under W(E6) and certify every step.

    Returns a Decomposition whose dimensions are (1, 6, 20).  Raises
    CertificateFailure naming the first failing certificate.
    """
    group = weyl.weyl_group()
    classes = weyl.weyl_classes()
    a = meeting_matrix()
    n = a.nrows

    _require(all(sum(row) == 10 for row in a.data), "meeting_matrix_row_sums")
    _require(strongly_regular_certificate(a), "strongly_regular_27_10_1_5")

    components = spectral_decomposition(a)
    _require(
        [(c.eigenvalue, c.dimension) for c in components]
        == [(10, 1), (1, 20), (-5, 6)],
        "eigenvalue_dimensions",
        f"got {[(c.eigenvalue, c.dimension) for c in components]}",
    )

    ident = QMatrix.identity(n)
    total = QMatrix.zeros(n, n)
    recon = QMatrix.zeros(n, n)
    for comp in components:
        total = total + comp.projector
        recon = recon + comp.projector.scaled(comp.eigenvalue)
    _require(total == ident, "projectors_sum_to_identity")
    _require(recon == a, "projectors_reconstruct_meeting_matrix")
    for i, ci in enumerate(components):
        for cj in components[i + 1 :]:
            _require(
                ci.projector * cj.projector == QMatrix.zeros(n, n),
                "projectors_pairwise_orthogonal",
                f"eigenvalues {ci.eigenvalue}, {cj.eigenvalue}",
            )

    gen_matrices = [permutation_matrix(g) for g in group.generators]
    for comp in components:
        for gm in gen_matrices:
            _require(
                gm * comp.projector == comp.projector * gm,
                "projectors_commute_with_action",
                f"eigenvalue {comp.eigenvalue}",
            )

    chi_perm = permutation_character(classes)
    one = trivial_character(classes)
    _require(
        inner_product(chi_perm, one, classes, group.order) == 1,
        "perm_character_contains_trivial_once",
    )
    _require(
        inner_product(chi_perm, chi_perm, classes, group.order) == 3,
        "perm_character_norm_equals_orbital_count",
    )
    _require(group.orbit_count_on_ordered_pairs() == 3, "three_orbitals")

    certified = []
    char_sum = [Fraction(0)] * len(classes)
    for comp in components:
        chi = constituent_character(comp, classes)
        _require(
            inner_product(chi, chi, classes, group.order) == 1,
            "constituent_is_irreducible",
            f"eigenvalue {comp.eigenvalue}",
        )
        char_sum = [s + v for s, v in zip(char_sum, chi)]
        certified.append(
            IsotypicComponent(
                comp.eigenvalue, comp.dimension, comp.projector, comp.subspace, chi
            )
        )
    _require(tuple(char_sum) == chi_perm, "constituents_sum_to_perm_character")
    _require(
        certified[0].character == one, "top_eigenvalue_carries_trivial_character"
    )

    dims = tuple(sorted(c.dimension for c in certified))
    _require(dims == (1, 6, 20), "dimensions_1_6_20", f"got {dims}")
    return Decomposition(tuple(certified), chi_perm, dims)
