"""Command-line front end.

Every verb reads JSON from --in, runs one library operation, and emits a
JSON report (to --out or stdout) holding the result, the provenance of the
inputs and fixtures consumed, and the wall-clock timing.  Exit status is 0
on success, 1 when the library rejects the mathematics (domain errors), and
2 when the input cannot be understood at all (schema errors).
"""

from __future__ import annotations

import argparse
import sys
import time

from . import acceptance, complexes as cx, formations as fm, forms, lagrangians
from . import matrices, plumbing, serialize as sz, witt
from .errors import DomainError, SchemaError, SurgeryAlgebraError


def _group_obj(g):
    return sz.group_to_obj(g)


def _load(path: str):
    return sz.read_json(path)


def _require(obj, key, what):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{what} needs a {key!r} key")
    return obj[key]


# --- verb implementations ---------------------------------------------------


def verb_form_info(args):
    q = sz.form_from_obj(_load(args.input))
    return {
        "ring": sz.ring_to_obj(q.ring),
        "epsilon": q.epsilon,
        "rank": q.rank,
        "nonsingular": forms.is_nonsingular(q),
        "even": forms.is_even(q),
    }


def verb_witt(args):
    q = sz.form_from_obj(_load(args.input))
    cls = witt.witt_class(q)
    out = {"epsilon": q.epsilon, "class": cls.value}
    if q.epsilon == 1:
        out["signature"] = witt.signature(q)
    return out


def verb_arf(args):
    q = sz.form_from_obj(_load(args.input))
    return {"arf": witt.arf(q)}


def verb_signature(args):
    q = sz.form_from_obj(_load(args.input))
    return {"signature": witt.signature(q)}


def verb_hyperbolic(args):
    from . import rings

    q = forms.hyperbolic_quadratic(rings.integers(), args.epsilon, args.ell)
    return {"form": sz.form_to_obj(q)}


def verb_split(args):
    q = sz.form_from_obj(_load(args.input))
    return {"split": sz.split_to_obj(forms.quadratic_to_split(q))}


def verb_surgery_form(args):
    obj = _load(args.input)
    q = sz.form_from_obj(_require(obj, "form", "surgery input"))
    xdata = _require(obj, "x", "surgery input")
    if not isinstance(xdata, list):
        raise SchemaError("x must be a list of entries")
    x = sz.matrix_from_obj(q.ring, [[v] for v in xdata], rows=q.rank, cols=1)
    out = lagrangians.surgery_on_form(q, x)
    return {"form": sz.form_to_obj(out)}


def verb_lagrangian_extend(args):
    q, inc = sz.inclusion_from_obj(_load(args.input))
    s = forms.quadratic_to_split(q)
    ext = lagrangians.extend_lagrangian(s, inc)
    verified = forms.is_split_morphism(
        ext, forms.hyperbolic_split(q.ring, q.epsilon, inc.basis.cols), s
    ) and matrices.is_unimodular(ext.f)
    return {"isometry": sz.matrix_to_obj(ext.f), "verified": verified}


def verb_reduce(args):
    q, inc = sz.inclusion_from_obj(_load(args.input))
    s = forms.quadratic_to_split(q)
    residual, iso = lagrangians.sublagrangian_reduction(s, inc)
    return {
        "residual": sz.split_to_obj(residual),
        "isometry": sz.matrix_to_obj(iso.f),
    }


def verb_plumb(args):
    g = sz.graph_from_obj(_load(args.input))
    q = plumbing.graph_to_form(g)
    return {"form": sz.form_to_obj(q), "rank": q.rank, "epsilon": q.epsilon}


def verb_boundary(args):
    q = sz.form_from_obj(_load(args.input))
    hn, hn1 = plumbing.boundary_homology(q)
    return {
        "h_n": _group_obj(hn),
        "h_n_plus_1_rank": hn1,
        "is_sphere": plumbing.is_homotopy_sphere_boundary(q),
    }


def verb_sphere(args):
    q = sz.form_from_obj(_load(args.input))
    out = {"is_sphere": plumbing.is_homotopy_sphere_boundary(q)}
    if q.epsilon == 1 and out["is_sphere"]:
        out["class_mod_28"] = plumbing.exotic7_class(q)
    return out


def verb_milnor(args):
    cls, exotic = plumbing.milnor_sphere(args.ell)
    return {"class_mod_28": cls, "exotic": exotic}


def verb_complex_validate(args):
    c = sz.complex_from_obj(_load(args.input))
    bad = cx.complex_violations(c)
    return {"valid": not bad, "violations": list(bad)}


def verb_complex_homology(args):
    c = sz.complex_from_obj(_load(args.input))
    hn, hn1 = cx.complex_homology(c)
    return {"h_n": _group_obj(hn), "h_n_plus_1_rank": hn1}


def verb_formation(args):
    obj = _load(args.input)
    if "psi0" in obj:
        phi = fm.complex_to_formation(sz.complex_from_obj(obj))
        return {"formation": sz.formation_to_obj(phi)}
    if "first" in obj or "second" in obj:
        a = sz.formation_from_obj(_require(obj, "first", "stable comparison"))
        b = sz.formation_from_obj(_require(obj, "second", "stable comparison"))
        pad = args.stabilize or 0
        iso = sz.matrix_from_obj(a.ring, _require(obj, "isometry", "stable comparison"))
        return {
            "stably_isomorphic": fm.verify_stable_isomorphism(a, b, iso, pad, pad),
            "pad": pad,
        }
    phi = sz.formation_from_obj(obj)
    out = {"violations": list(fm.formation_violations(phi))}
    out["valid"] = not out["violations"]
    if out["valid"]:
        grp, inter = fm.formation_homology(phi)
        out["quotient"] = _group_obj(grp)
        out["intersection_rank"] = inter
        triv = fm.is_trivial_formation(phi)
        out["trivial"] = triv is not None
        if triv is not None:
            out["trivializer"] = sz.matrix_to_obj(triv.f)
        if args.witness:
            h = sz.matrix_from_obj(phi.ring, _load(args.witness), rows=phi.rank)
            kform, iso = fm.boundary_witness(phi, h)
            out["kernel_form"] = sz.form_to_obj(kform)
            out["isometry"] = sz.matrix_to_obj(iso.f)
    return out


def verb_formation_from_aut(args):
    u = sz.unitary_from_obj(_load(args.input))
    phi = fm.formation_from_automorphism(u)
    return {"formation": sz.formation_to_obj(phi)}


def verb_surgery_complex(args):
    obj = _load(args.input)
    c = sz.complex_from_obj(_require(obj, "complex", "surgery input"))
    steps = _require(obj, "surgeries", "surgery input")
    if not isinstance(steps, list):
        raise SchemaError("surgeries must be a list")
    current = c
    traces_valid = True
    for step in steps:
        s = sz.surgery_from_obj(step, source=current)
        effect, trace = cx.surgery_on_complex(current, s)
        traces_valid = traces_valid and cx.validate_cobordism(current, effect, trace)
        current = effect
    return {
        "effect": sz.complex_to_obj(current),
        "traces_valid": traces_valid,
        "contractible": cx.is_contractible(current),
    }


def verb_cobordism_validate(args):
    obj = _load(args.input)
    c = sz.complex_from_obj(_require(obj, "source", "cobordism input"))
    cprime = sz.complex_from_obj(_require(obj, "target", "cobordism input"))
    cob = sz.cobordism_from_obj(c.ring, _require(obj, "cobordism", "cobordism input"),
                                source=c, target=cprime)
    return {"valid": cx.validate_cobordism(c, cprime, cob)}


def verb_union(args):
    obj = _load(args.input)
    left = sz.complex_from_obj(_require(obj, "left", "union input"))
    middle = sz.complex_from_obj(_require(obj, "middle", "union input"))
    right = sz.complex_from_obj(_require(obj, "right", "union input"))
    first = sz.cobordism_from_obj(left.ring, _require(obj, "first", "union input"),
                                  source=left, target=middle)
    second = sz.cobordism_from_obj(left.ring, _require(obj, "second", "union input"),
                                   source=middle, target=right)
    glued = cx.union_cobordisms(left, middle, right, first, second)
    return {
        "cobordism": sz.cobordism_to_obj(glued),
        "valid": cx.validate_cobordism(left, right, glued),
    }


def verb_suite(args):
    reports = acceptance.run_all(max_workers=args.jobs)
    for rep in reports:
        status = "PASS" if rep["passed"] else "FAIL"
        print(f"{status} criterion {rep['criterion']:2d} ({rep['name']}): {rep['detail']}")
    return {
        "criteria": reports,
        "passed": all(r["passed"] for r in reports),
    }


VERBS = {
    "form-info": (verb_form_info, "summarize a quadratic form file"),
    "witt": (verb_witt, "stable class of a nonsingular form over Z"),
    "arf": (verb_arf, "arf invariant of a (-1)-quadratic form over Z"),
    "signature": (verb_signature, "signature of a (+1)-form over Z"),
    "hyperbolic": (verb_hyperbolic, "emit a standard hyperbolic form"),
    "split": (verb_split, "canonical split lift of a quadratic form"),
    "surgery-form": (verb_surgery_form, "kill a mu-isotropic vector in a form"),
    "lagrangian-extend": (verb_lagrangian_extend, "extend a lagrangian to a hyperbolic isomorphism"),
    "reduce": (verb_reduce, "split a hyperbolic block off a sublagrangian"),
    "plumb": (verb_plumb, "intersection form of a plumbing graph"),
    "boundary": (verb_boundary, "boundary homology of a plumbing form"),
    "sphere": (verb_sphere, "does the plumbing boundary have sphere homology"),
    "milnor": (verb_milnor, "mod-28 class of an odd sphere bundle twist"),
    "complex-validate": (verb_complex_validate, "check the duality conditions of a complex"),
    "complex-homology": (verb_complex_homology, "homology of a two-term complex"),
    "formation": (verb_formation, "analyze a formation (or build one from a complex)"),
    "formation-from-aut": (verb_formation_from_aut, "formation of a hyperbolic automorphism"),
    "surgery-complex": (verb_surgery_complex, "apply a surgery sequence to a complex"),
    "cobordism-validate": (verb_cobordism_validate, "check a cobordism between complexes"),
    "union": (verb_union, "glue two cobordisms along their middle complex"),
    "suite": (verb_suite, "run the full acceptance suite"),
}

NEEDS_INPUT = {
    "form-info", "witt", "arf", "signature", "split", "surgery-form",
    "lagrangian-extend", "reduce", "plumb", "boundary", "sphere",
    "complex-validate", "complex-homology", "formation", "formation-from-aut",
    "surgery-complex", "cobordism-validate", "union",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surgery-algebra",
        description="exact computations with quadratic forms, complexes, and formations",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb, (fn, help_text) in VERBS.items():
        p = sub.add_parser(verb, help=help_text)
        p.set_defaults(fn=fn)
        if verb in NEEDS_INPUT:
            p.add_argument("--in", dest="input", required=True, help="input JSON file")
        p.add_argument("--out", dest="output", help="write the report here instead of stdout")
        if verb == "hyperbolic":
            p.add_argument("--epsilon", type=int, choices=(1, -1), required=True)
            p.add_argument("--ell", type=int, required=True, help="rank of the lagrangian summand")
        if verb == "milnor":
            p.add_argument("--ell", type=int, required=True, help="odd twisting parameter")
        if verb == "formation":
            p.add_argument("--witness", help="JSON matrix file: a lagrangian to test as a common complement")
            p.add_argument("--stabilize", type=int, default=0,
                           help="pad both sides with this many trivial ranks before comparing")
        if verb == "suite":
            p.add_argument("--jobs", type=int, default=1, help="run criteria concurrently")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = {"verb": args.verb}
    start = time.monotonic()
    try:
        result = args.fn(args)
        status = 0
    except SchemaError as e:
        report["error"] = str(e)
        report["kind"] = "schema"
        status = 2
    except (DomainError, SurgeryAlgebraError) as e:
        report["error"] = str(e)
        report["kind"] = "domain"
        status = 1
    if status == 0:
        report["result"] = result
        if args.verb == "suite" and not result["passed"]:
            status = 1
    report["provenance"] = {
        "inputs": [p for p in (getattr(args, "input", None), getattr(args, "witness", None)) if p],
        "fixtures": acceptance.fixture_names("") if args.verb == "suite" else [],
    }
    report["seconds"] = round(time.monotonic() - start, 3)
    text = sz.dumps_canonical(report)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
