"""Command-line interface with deterministic, machine-readable output.

Every command emits an envelope carrying the command name, echoed
parameters, the result payload, and a list of named certificates.  JSON
output is canonical (sorted keys, rationals rendered as "p/q" strings,
integers bare) and byte-identical across runs; text output is for humans
and carries no stability guarantee.  Exit codes: 0 all certificates pass,
1 certificate failure or internal abort, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import decomp, equivalences, picard, weyl
from .errors import CertificateFailure, ModelError, UnsupportedScaleError

SCHEMA_VERSION = 1

COMMANDS = (
    "lines",
    "roots",
    "triangles",
    "group",
    "decompose",
    "equivalences",
    "theorem",
    "verify-all",
)


def jsonable(x):
    """Convert engine values to canonical JSON-serializable structures."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool) or isinstance(x, int) or isinstance(x, str) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x)!r}")


def matrix_rows(m):
    return [list(r) for r in m.data]


def subspace_payload(s):
    return {
        "ambient_dim": s.ambient_dim,
        "dim": s.dim,
        "basis": matrix_rows(s.basis),
    }


class Certificates:
    def __init__(self):
        self.entries = []

    def add(self, name, passed, details=None):
        self.entries.append(
            {"name": name, "passed": bool(passed), "details": details}
        )

    def check(self, name, passed, details=None):
        self.add(name, passed, details if not passed else None)

    @property
    def all_passed(self):
        return all(e["passed"] for e in self.entries)


# -- result builders ---------------------------------------------------


def result_lines(certs):
    lines = picard.enumerate_lines()
    certs.check("line_count_is_27", len(lines) == 27)
    certs.check(
        "each_line_meets_10",
        all(
            sum(1 for b in lines if picard.pairing(a.cls, b.cls) == 1) == 10
            for a in lines
        ),
    )
    certs.check(
        "each_line_in_5_triangles",
        all(len(picard.triangles_through_line(a.index)) == 5 for a in lines),
    )
    return {
        "count": len(lines),
        "entries": [
            {"index": line.index, "label": line.label, "cls": list(line.cls)}
            for line in lines
        ],
        "pairing_matrix": [
            [picard.pairing(a.cls, b.cls) for b in lines] for a in lines
        ],
    }


def result_roots(certs):
    roots = picard.enumerate_roots()
    certs.check("root_count_is_72", len(roots) == 72)
    vecs = {r.vec for r in roots}
    certs.check(
        "roots_closed_under_negation",
        all(tuple(-c for c in v) in vecs for v in vecs),
    )
    return {"count": len(roots), "entries": [list(r.vec) for r in roots]}


def result_triangles(certs):
    lines = picard.enumerate_lines()
    triangles = picard.enumerate_triangles()
    certs.check("triangle_count_is_45", len(triangles) == 45)
    entries = []
    for t in triangles:
        total = tuple(
            sum(lines[i].cls[k] for i in t.members) for k in range(7)
        )
        entries.append(
            {
                "members": list(t.members),
                "labels": [lines[i].label for i in t.members],
                "sum_is_minus_K": total == picard.MINUS_K,
            }
        )
    certs.check("each_triangle_sums_to_minus_K", all(e["sum_is_minus_K"] for e in entries))
    shapes = {}
    for e in entries:
        shape = "".join(sorted(label[0] for label in e["labels"]))
        shapes[shape] = shapes.get(shape, 0) + 1
    return {"count": len(triangles), "entries": entries, "shape_counts": shapes}


def result_group(certs):
    group = weyl.weyl_group()
    classes = weyl.weyl_classes()
    certs.check("order_is_51840", group.order == 51840)
    certs.check("order_factors_as_2e7_3e4_5", group.order == 2**7 * 3**4 * 5)
    certs.check(
        "bsgs_generators_sift_to_identity",
        all(group.sift(g) == weyl.identity_perm(27) for g in group.generators),
    )
    certs.check("class_count_is_25", len(classes) == 25)
    certs.check(
        "class_equation_holds",
        sum(c.size for c in classes) == group.order
        and all(group.order % c.size == 0 for c in classes),
    )
    certs.check("transitive_on_lines", group.orbits_on_points() == (tuple(range(27)),))
    orbitals = group.orbit_count_on_ordered_pairs()
    certs.check("orbital_count_is_3", orbitals == 3)
    a = decomp.meeting_matrix()
    certs.check(
        "generators_preserve_meeting",
        all(
            a.data[i][j] == a.data[g[i]][g[j]]
            for g in group.generators
            for i in range(27)
            for j in range(27)
        ),
    )
    return {
        "order": group.order,
        "base": list(group.base),
        "basic_orbit_lengths": [len(o) for o in group.basic_orbits],
        "strong_generator_count": len(group.strong_generators),
        "generators": [list(g) for g in group.generators],
        "orbitals_on_ordered_pairs": orbitals,
        "class_count": len(classes),
        "classes": [
            {
                "size": c.size,
                "cycle_type": list(c.cycle_type),
                "representative": list(c.representative),
            }
            for c in classes
        ],
    }


def result_decompose(certs):
    try:
        decomposition = decomp.decompose()
    except CertificateFailure as exc:
        certs.add(exc.name, False, exc.details or None)
        raise
    group = weyl.weyl_group()
    classes = weyl.weyl_classes()
    chi = decomposition.perm_character
    certs.check("dimensions_are_1_6_20", decomposition.dimensions == (1, 6, 20))
    certs.check(
        "eigenvalues_are_10_1_minus5",
        [c.eigenvalue for c in decomposition.components] == [10, 1, -5],
    )
    certs.check(
        "perm_character_contains_trivial_once",
        decomp.inner_product(chi, decomp.trivial_character(classes), classes, group.order) == 1,
    )
    certs.check(
        "perm_character_norm_is_3",
        decomp.inner_product(chi, chi, classes, group.order) == 3,
    )
    for comp in decomposition.components:
        certs.check(
            f"constituent_dim_{comp.dimension}_has_norm_1",
            decomp.inner_product(comp.character, comp.character, classes, group.order) == 1,
        )
    certs.check("strongly_regular_27_10_1_5", decomp.strongly_regular_certificate(decomp.meeting_matrix()))
    return {
        "eigenvalues": [c.eigenvalue for c in decomposition.components],
        "dimensions": list(decomposition.dimensions),
        "components": [
            {
                "eigenvalue": c.eigenvalue,
                "dimension": c.dimension,
                "character": list(c.character),
            }
            for c in decomposition.components
        ],
        "permutation_character": list(chi),
        "class_sizes": [c.size for c in classes],
    }


def result_equivalences(certs):
    vt = equivalences.v_tet()
    rt = equivalences.r_tet()
    certs.check("triangle_span_dim_is_21", vt.dim == 21)
    certs.check("triangle_matrix_rank_is_21", equivalences.triangle_matrix().rank() == 21)
    certs.check("relation_space_dim_is_20", rt.dim == 20)
    certs.check("picard_kernel_equals_relation_space", equivalences.picard_class_map_kernel() == rt)
    certs.check(
        "eigenspace_1_equals_relation_space",
        decomp.decompose().component_by_eigenvalue(1).subspace == rt,
    )
    m = equivalences.picard_class_matrix()
    minus_k = tuple(Fraction(c) for c in picard.MINUS_K)
    certs.check(
        "triangles_map_to_minus_K",
        all(m.apply(v) == minus_k for v in equivalences.triangle_vectors()),
    )
    report = equivalences.corollary_checks()
    certs.check("corollary_projections_nonzero", report["all_projections_nonzero"])
    certs.check("corollary_pairs_nonproportional", report["all_pairs_nonproportional"])
    certs.check("corollary_triangles_annihilated", report["triangles_annihilated"])
    taut = equivalences.taut_ring_basis()
    certs.check("taut_ring_total_dim_is_8", len(taut.monomials) == 8)
    certs.check("taut_ring_graded_dims", taut.graded_dims == (1, 1, 1, 2, 2, 1))
    return {
        "v_tet_dim": vt.dim,
        "r_tet_dim": rt.dim,
        "r_tet_basis": matrix_rows(rt.basis),
        "corollary": report,
        "taut_ring": {
            "monomials": [list(mono) for mono in taut.monomials],
            "graded_dims": list(taut.graded_dims),
            "total_dim": len(taut.monomials),
        },
    }


def result_theorem(certs):
    survivors, audit = equivalences.theorem_assembly()
    certs.check("unique_survivor", len(survivors) == 1)
    survivor = equivalences.theorem_survivor()
    certs.check("survivor_dim_is_20", survivor.dim == 20)
    certs.check("survivor_equals_relation_space", survivor == equivalences.r_tet())
    relaxed, _ = equivalences.theorem_assembly(use_difference_constraint=False)
    certs.check("two_survivors_without_difference_constraint", len(relaxed) == 2)
    return {
        "survivor": {
            "eigenvalues": list(survivors[0].eigenvalues),
            "dim": survivor.dim,
            "basis": matrix_rows(survivor.basis),
        },
        "constraints": list(equivalences.CONSTRAINT_NAMES),
        "audit": [
            {
                "eigenvalues": list(entry["eigenvalues"]),
                "dim": entry["dim"],
                "eliminated_by": entry["eliminated_by"],
            }
            for entry in audit
        ],
        "survivor_count_without_difference_constraint": len(relaxed),
    }


RESULT_BUILDERS = {
    "lines": result_lines,
    "roots": result_roots,
    "triangles": result_triangles,
    "group": result_group,
    "decompose": result_decompose,
    "equivalences": result_equivalences,
    "theorem": result_theorem,
}


def result_verify_all(certs):
    """Run every stage in dependency order; keep only headline numbers."""
    lines_payload = result_lines(certs)
    roots_payload = result_roots(certs)
    triangles_payload = result_triangles(certs)
    group_payload = result_group(certs)
    decompose_payload = result_decompose(certs)
    equivalences_payload = result_equivalences(certs)
    theorem_payload = result_theorem(certs)
    return {
        "line_count": lines_payload["count"],
        "root_count": roots_payload["count"],
        "triangle_count": triangles_payload["count"],
        "group_order": group_payload["order"],
        "class_count": group_payload["class_count"],
        "orbitals_on_ordered_pairs": group_payload["orbitals_on_ordered_pairs"],
        "dimensions": decompose_payload["dimensions"],
        "v_tet_dim": equivalences_payload["v_tet_dim"],
        "r_tet_dim": equivalences_payload["r_tet_dim"],
        "survivor_dim": theorem_payload["survivor"]["dim"],
        "taut_ring_total_dim": equivalences_payload["taut_ring"]["total_dim"],
        "certificate_count": len(certs.entries),
    }


# -- rendering ----------------------------------------------------------


def render_json(envelope):
    return json.dumps(jsonable(envelope), sort_keys=True, indent=2) + "\n"


def render_text(envelope, quiet):
    out = [f"command: {envelope['command']}"]
    result = envelope["result"]

    def fmt(value, indent=0):
        pad = "  " * indent
        if isinstance(value, dict):
            return "\n".join(
                f"{pad}{k}:" + ("\n" + fmt(v, indent + 1) if isinstance(v, (dict, list)) else f" {jsonable(v)}")
                for k, v in value.items()
            )
        if isinstance(value, list):
            if len(value) > 8:
                return f"{pad}[{len(value)} entries]"
            return "\n".join(f"{pad}- {jsonable(v)}" for v in value)
        return f"{pad}{jsonable(value)}"

    out.append(fmt(jsonable(result)))
    if not quiet:
        out.append("certificates:")
        for entry in envelope["certificates"]:
            status = "PASS" if entry["passed"] else "FAIL"
            line = f"  [{status}] {entry['name']}"
            if entry["details"]:
                line += f" -- {entry['details']}"
            out.append(line)
    if "elapsed_seconds" in envelope:
        out.append(f"elapsed_seconds: {envelope['elapsed_seconds']}")
    return "\n".join(out) + "\n"


def run_command(command, fmt="json", quiet=False, stdout=None, stderr=None):
    """Execute one subcommand; returns the process exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    certs = Certificates()
    started = time.monotonic()
    try:
        if command == "verify-all":
            result = result_verify_all(certs)
        else:
            result = RESULT_BUILDERS[command](certs)
    except (ModelError, CertificateFailure, UnsupportedScaleError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    elapsed = time.monotonic() - started
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": {"format": fmt},
        "result": result,
        "certificates": certs.entries,
    }
    if fmt == "json":
        # keep JSON byte-stable: timing goes to stderr only
        print(f"{command}: elapsed {elapsed:.3f}s", file=stderr)
        stdout.write(render_json(envelope))
    else:
        envelope["elapsed_seconds"] = round(elapsed, 3)
        stdout.write(render_text(envelope, quiet))
    if not certs.all_passed:
        failing = next(e["name"] for e in certs.entries if not e["passed"])
        print(f"error: certificate failed: {failing}", file=stderr)
        return 1
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cubic27",
        description=(
            "Exact computations on the 27 lines of a cubic surface, the Weyl "
            "group W(E6), and the 20-dimensional space of relations among "
            "the 27 curve classes."
        ),
    )
    parser.add_argument(
        "command",
        choices=COMMANDS,
        help="which computation to run (verify-all runs every certificate)",
    )
    parser.add_argument(
        "--format",
        choices=("json", "text"),
        default="json",
        help="json is canonical and byte-stable; text is human-oriented",
    )
    parser.add_argument(
        "--quiet",
        action="store_true",
        help="suppress the certificate listing (text mode only)",
    )
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return run_command(args.command, fmt=args.format, quiet=args.quiet)


if __name__ == "__main__":
    sys.exit(main())
