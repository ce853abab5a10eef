"""Command-line front end with stable JSON output.

Every subcommand prints (or writes with --out) an envelope

    {"status": ..., "command": ..., "payload": ..., "diagnostics": [...]}

and exits 0 (ok), 1 (failed mathematical validation), 2 (bad input or
unknown command), 3 (enumeration budget exceeded).  Output is byte-identical
for identical inputs; the environment variable UAL_BUDGET overrides the
default enumeration budget of 10^8 candidates.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebras import (
    algebra_from_dict,
    check_leibniz,
    check_lie,
    coerce_algebra,
    current_algebra,
    load_algebra,
    truncated_poly_algebra,
)
from .errors import InputError, UnileibError
from .fields import PrimeField
from .gradings import (
    FiniteAbelianGroup,
    bihom_to_grading,
    classify_gradings,
    diagonal_gradings,
    enumerate_actions,
    action_to_bihom,
    grading_to_bihom,
    group_commutative_algebra,
)
from .homspace import (
    enumerate_automorphism_characters,
    enumerate_characters,
    enumerate_representations,
)
from .poly import DEGREVLEX, LEX
from .universal import (
    build_presentation,
    comultiplication,
    universal_polynomials,
    verify_comodule,
    verify_eta_hom,
)


def _load(path: str, prime: int | None = None):
    alg = load_algebra(path)
    if prime is not None:
        alg = coerce_algebra(alg, PrimeField(prime))
    return alg


def _emit(args, command: str, status: str, payload, diagnostics=None) -> None:
    envelope = {
        "status": status,
        "command": command,
        "payload": payload,
        "diagnostics": diagnostics or [],
    }
    text = json.dumps(envelope, indent=2) + "\n"
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    alg = load_algebra(args.algebra, validate=False)
    ok, violations = check_leibniz(alg)
    payload = {
        "name": alg.name or "",
        "dim": alg.dim,
        "field": alg.field.to_json(),
        "leibniz": ok,
        "lie": check_lie(alg) if ok else False,
        "violations": [list(v) for v in violations],
    }
    status = "ok" if ok else "validation_error"
    _emit(args, "check", status, payload)
    return 0 if ok else 1


def _pair(args):
    h = _load(args.algebra, getattr(args, "prime", None))
    if getattr(args, "g", None):
        g = _load(args.g, getattr(args, "prime", None))
    else:
        g = h
    return h, g


def cmd_upoly(args) -> int:
    h, g = _pair(args)
    upolys = universal_polynomials(h, g)
    entries = [
        {"index": list(key), "terms": poly.to_json(DEGREVLEX)}
        for key, poly in sorted(upolys.items())
    ]
    payload = {
        "dims": {"rows": h.dim, "cols": g.dim},
        "field": h.field.to_json(),
        "count": len(entries),
        "nonzero_count": sum(1 for _, p in upolys.items() if not p.is_zero()),
        "universal_polys": entries,
    }
    _emit(args, "upoly", "ok", payload)
    return 0


def cmd_present(args) -> int:
    h, g = _pair(args)
    pres = build_presentation(h, g, order=args.order)
    payload = pres.to_json()
    payload["unit_ideal"] = pres.gb.is_unit
    _emit(args, "present", "ok", payload)
    return 0


def cmd_bialgebra_check(args) -> int:
    h = _load(args.algebra)
    pres = build_presentation(h, h)
    eta_cert = verify_eta_hom(pres)
    _, delta_cert = comultiplication(pres)
    comodule_cert = verify_comodule(pres)
    ok = eta_cert.ok and delta_cert.ok and comodule_cert.ok
    payload = {
        "name": h.name or "",
        "coaction_homomorphism": eta_cert.ok,
        "comultiplication_well_defined": delta_cert.ok,
        "comodule_axioms": comodule_cert.ok,
        "checks_run": len(eta_cert.checks) + len(delta_cert.checks) + len(comodule_cert.checks),
        "failures": [
            c for cert in (eta_cert, delta_cert, comodule_cert) for c in cert.checks if not c["ok"]
        ],
    }
    _emit(args, "bialgebra-check", "ok" if ok else "validation_error", payload)
    return 0 if ok else 1


def cmd_chars(args) -> int:
    h, g = _pair(args)
    pres = build_presentation(h, g)
    chars = enumerate_characters(pres, args.prime, args.budget)
    payload = {
        "dims": {"rows": h.dim, "cols": g.dim},
        "prime": args.prime,
        "count": len(chars),
        "characters": [c.to_json() for c in chars],
    }
    _emit(args, "chars", "ok", payload)
    return 0


def cmd_autos(args) -> int:
    h = _load(args.algebra, args.prime)
    pres = build_presentation(h, h)
    autos = enumerate_automorphism_characters(pres, args.prime, args.budget)
    payload = {
        "name": h.name or "",
        "prime": args.prime,
        "count": len(autos),
        "elements": [c.to_json() for c in autos],
    }
    _emit(args, "autos", "ok", payload)
    return 0


def cmd_reps(args) -> int:
    g = _load(args.algebra, args.prime)
    reps = enumerate_representations(g, args.m, args.prime, args.budget)
    payload = {
        "name": g.name or "",
        "prime": args.prime,
        "matrix_size": args.m,
        "count": len(reps),
        "representations": [r.to_json() for r in reps],
    }
    _emit(args, "reps", "ok", payload)
    return 0


def cmd_gradings(args) -> int:
    h = _load(args.algebra)
    group = FiniteAbelianGroup.parse(args.group)
    pres = build_presentation(h, h)
    gradings = diagonal_gradings(h, group)
    entries = []
    for gr in gradings:
        theta = grading_to_bihom(gr, pres)
        back = bihom_to_grading(theta, pres)
        entries.append(
            {
                "grading": gr.to_json(),
                "bialgebra_hom": theta.to_json(),
                "round_trip_ok": back.to_json() == gr.to_json(),
            }
        )
    payload = {
        "group": group.spec(),
        "scope": "diagonal",
        "count": len(entries),
        "gradings": entries,
    }
    _emit(args, "gradings", "ok", payload)
    return 0


def cmd_classify_gradings(args) -> int:
    h = _load(args.algebra, args.prime)
    group = FiniteAbelianGroup.parse(args.group)
    classes = classify_gradings(h, group, args.prime, args.budget)
    payload = {
        "group": group.spec(),
        "prime": args.prime,
        "scope": "diagonal_plus_conjugates",
        "count": len(classes),
        "classes": [
            {
                "representative": c["representative"].to_json(),
                "grading": c["grading"].to_json(),
                "orbit_size": c["orbit_size"],
            }
            for c in classes
        ],
    }
    _emit(args, "classify-gradings", "ok", payload)
    return 0


def cmd_actions(args) -> int:
    h = _load(args.algebra, args.prime)
    group = FiniteAbelianGroup.parse(args.group)
    actions = enumerate_actions(h, group, args.prime, args.budget)
    entries = []
    for phi in actions:
        theta = action_to_bihom(phi)
        entries.append({"action": phi.to_json(), "bialgebra_hom": theta.to_json()})
    payload = {
        "group": group.spec(),
        "prime": args.prime,
        "count": len(entries),
        "actions": entries,
    }
    _emit(args, "actions", "ok", payload)
    return 0


def cmd_current(args) -> int:
    h = _load(args.algebra)
    if args.group:
        group = FiniteAbelianGroup.parse(args.group)
        A = group_commutative_algebra(h.field, group)
    else:
        A = truncated_poly_algebra(h.field, args.trunc)
    cur = current_algebra(h, A)
    payload = cur.to_json()
    _emit(args, "current", "ok", payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unileib",
        description=(
            "Exact computations with the universal coacting bialgebra of a "
            "finite-dimensional Leibniz/Lie algebra given by structure constants."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("algebra", help="algebra file (JSON structure constants)")
        p.add_argument("--out", help="write the JSON result to this file")
        p.set_defaults(fn=fn)
        return p

    add("check", cmd_check, "Validate the Leibniz identity and report whether the bracket is Lie.")

    p = add("upoly", cmd_upoly, "Emit the universal polynomials of the algebra pair (h, g).")
    p.add_argument("--g", help="second algebra file; defaults to the square case g = h")

    p = add(
        "present",
        cmd_present,
        "Build the universal-algebra presentation: generators plus reduced Groebner basis.",
    )
    p.add_argument("--g", help="second algebra file; defaults to the square case g = h")
    p.add_argument("--order", choices=[DEGREVLEX, LEX], default=DEGREVLEX, help="monomial order")

    add(
        "bialgebra-check",
        cmd_bialgebra_check,
        "Verify the coacting bialgebra: coaction homomorphism, well-defined "
        "comultiplication/counit, coassociativity, counit laws, comodule axioms.",
    )

    p = add(
        "chars",
        cmd_chars,
        "Enumerate all characters of the universal algebra over GF(p) "
        "(equivalently all Leibniz homomorphisms g -> h).",
    )
    p.add_argument("--g", help="second algebra file; defaults to the square case g = h")
    p.add_argument("--prime", type=int, required=True, help="enumeration field GF(p)")
    p.add_argument("--budget", type=int, help="candidate budget override")

    p = add(
        "autos",
        cmd_autos,
        "Enumerate the automorphism group over GF(p) as invertible characters "
        "of the universal algebra.",
    )
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--budget", type=int)

    p = add(
        "reps",
        cmd_reps,
        "Enumerate m-dimensional matrix representations of a Lie algebra over GF(p), "
        "as characters of the universal algebra of (gl(m), g).",
    )
    p.add_argument("--m", type=int, required=True, help="representation dimension")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--budget", type=int)

    p = add(
        "gradings",
        cmd_gradings,
        "Enumerate diagonal group gradings and their bialgebra homomorphisms into k[G].",
    )
    p.add_argument("--group", required=True, help="finite abelian group, e.g. Z2 or Z2xZ4")

    p = add(
        "classify-gradings",
        cmd_classify_gradings,
        "Classify gradings up to conjugation by automorphisms over GF(p).",
    )
    p.add_argument("--group", required=True)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--budget", type=int)

    p = add(
        "actions",
        cmd_actions,
        "Enumerate actions of a finite abelian group by automorphisms over GF(p), "
        "with their bialgebra homomorphisms into the dual group algebra.",
    )
    p.add_argument("--group", required=True)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--budget", type=int)

    p = add("current", cmd_current, "Build the current algebra h⊗A for a commutative algebra A.")
    p.add_argument("--trunc", type=int, default=2, help="use A = k[t]/(t^L) with this L")
    p.add_argument("--group", help="use the group algebra of this finite abelian group instead")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UnileibError as exc:
        _emit(args, args.command, exc.status, {}, diagnostics=[str(exc)])
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
