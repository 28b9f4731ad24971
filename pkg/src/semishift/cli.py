"""Command-line front end.

Each invocation reads one JSON document (--input PATH or stdin), runs a
library pipeline and writes JSON to stdout; grid-valued commands write
CSV to the --out path.  Floats are rendered with 17 significant digits
in lowercase scientific notation and complex numbers as [re, im] pairs,
so identical inputs produce byte-identical output.

Exit codes: 0 success, 2 domain error, 3 validation error, 4 internal
invariant violation.
"""

import argparse
import json
import sys

import numpy as np

from . import verify as verify_mod
from .branch import support_halfwidth
from .errors import DomainError, InternalError, SemishiftError
from .inversion import (
    classify_positivity,
    one_shift_from_roots,
    two_shift_deg3,
    two_shift_even_quartic,
)
from .jacobi import extract_jacobi, resolvent00
from .perturb import (
    apply_steps,
    n_shift_perturbation,
    paper_literal_pq,
    semicircle_matrix,
)
from .poly import Poly
from .residues import pole_terms, residue_polynomial, stieltjes_from_density
from .residues import normalize_general
from .shifts import shift_chain
from .transforms import AlgebraicStieltjes, decompose_measure, haagerup_transform


class ValidationError(Exception):
    pass


# ---------------------------------------------------------------------------
# deterministic serialization

def _fmt_float(x):
    return f"{float(x):.16e}"


def _to_jsonable(obj):
    if isinstance(obj, dict):
        return {k: _to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_jsonable(v) for v in obj]
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return [_to_jsonable(v) for v in obj.tolist()]
    return obj


def _dump(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(
            f'{pad}  {json.dumps(k)}: {_dump(v, indent + 1)}' for k, v in obj.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        flat = all(not isinstance(v, (dict, list)) for v in obj)
        if flat:
            return "[" + ", ".join(_dump(v) for v in obj) + "]"
        items = ",\n".join(f"{pad}  {_dump(v, indent + 1)}" for v in obj)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, int):
        return str(obj)
    return json.dumps(obj)


def emit(obj, stream=None):
    (stream or sys.stdout).write(_dump(_to_jsonable(obj)) + "\n")


# ---------------------------------------------------------------------------
# input validation

def _require(doc, field, kind, where="document"):
    if field not in doc:
        raise ValidationError(f"{where}: missing required field {field!r}")
    return _check(doc[field], kind, f"{where}.{field}")


def _check(value, kind, where):
    if kind == "number":
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValidationError(f"{where}: expected a number, got {value!r}")
        return float(value)
    if kind == "int":
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError(f"{where}: expected an integer, got {value!r}")
        return value
    if kind == "cnum":
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return complex(value)
        if (
            isinstance(value, list)
            and len(value) == 2
            and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
        ):
            return complex(value[0], value[1])
        raise ValidationError(f"{where}: expected a number or [re, im], got {value!r}")
    if kind == "cnum_list":
        if not isinstance(value, list):
            raise ValidationError(f"{where}: expected a list")
        return [_check(v, "cnum", f"{where}[{i}]") for i, v in enumerate(value)]
    if kind == "pair_list":
        if not isinstance(value, list):
            raise ValidationError(f"{where}: expected a list of [alpha, beta] pairs")
        out = []
        for i, v in enumerate(value):
            if not isinstance(v, list) or len(v) != 2:
                raise ValidationError(f"{where}[{i}]: expected an [alpha, beta] pair")
            out.append(
                (
                    _check(v[0], "cnum", f"{where}[{i}][0]"),
                    _check(v[1], "cnum", f"{where}[{i}][1]"),
                )
            )
        return out
    if kind == "str":
        if not isinstance(value, str):
            raise ValidationError(f"{where}: expected a string, got {value!r}")
        return value
    raise AssertionError(kind)


def _reject_unknown(doc, allowed, where="document"):
    unknown = sorted(set(doc) - set(allowed))
    if unknown:
        raise ValidationError(f"{where}: unknown fields {unknown}")


def _read_document(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read input: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(doc, dict):
        raise ValidationError("top-level JSON value must be an object")
    return doc


# ---------------------------------------------------------------------------
# transform construction

TRANSFORM_FIELDS = {
    "semicircle": {"type", "c"},
    "haagerup": {"type", "r", "lambda"},
    "one-shift": {"type", "c", "alpha", "beta"},
    "two-shift": {"type", "c", "alpha", "beta", "gamma", "delta"},
    "chain": {"type", "c", "steps"},
    "algebraic": {"type", "c", "F", "kappa", "G"},
    "density": {"type", "c", "Q"},
}


def build_transform(spec, where="transform"):
    if not isinstance(spec, dict):
        raise ValidationError(f"{where}: expected an object")
    kind = _require(spec, "type", "str", where)
    if kind not in TRANSFORM_FIELDS:
        raise ValidationError(f"{where}.type: unknown transform type {kind!r}")
    _reject_unknown(spec, TRANSFORM_FIELDS[kind], where)
    if kind == "semicircle":
        return AlgebraicStieltjes.semicircle(_require(spec, "c", "number", where))
    if kind == "haagerup":
        return haagerup_transform(
            _require(spec, "r", "number", where),
            _require(spec, "lambda", "cnum", where),
        )
    if kind == "one-shift":
        c = _require(spec, "c", "number", where)
        return shift_chain(
            c,
            [
                (
                    _require(spec, "alpha", "cnum", where),
                    _require(spec, "beta", "cnum", where),
                )
            ],
        )
    if kind == "two-shift":
        from .shifts import two_shift_closed

        return two_shift_closed(
            _require(spec, "alpha", "cnum", where),
            _require(spec, "beta", "cnum", where),
            _require(spec, "gamma", "cnum", where),
            _require(spec, "delta", "cnum", where),
            _require(spec, "c", "number", where),
        )
    if kind == "chain":
        return shift_chain(
            _require(spec, "c", "number", where),
            _require(spec, "steps", "pair_list", where),
        )
    if kind == "algebraic":
        return AlgebraicStieltjes(
            Poly(_require(spec, "F", "cnum_list", where)),
            _require(spec, "kappa", "cnum", where),
            Poly(_require(spec, "G", "cnum_list", where)),
            _require(spec, "c", "number", where),
        )
    # density
    c = _require(spec, "c", "number", where)
    Q = Poly(np.asarray(_require(spec, "Q", "cnum_list", where)))
    return stieltjes_from_density(Q, c)


# ---------------------------------------------------------------------------
# commands

def cmd_expand(args):
    doc = _read_document(args.input)
    _reject_unknown(doc, {"transform", "depth"})
    if "transform" not in doc:
        raise ValidationError("document: missing required field 'transform'")
    depth = args.depth
    if "depth" in doc:
        depth = _check(doc["depth"], "int", "document.depth")
    S = build_transform(doc["transform"])
    tol = args.tol if args.tol is not None else 1e-9
    J = extract_jacobi(S.series(2 * depth + 4), depth, real_tol=tol)
    emit(
        {
            "tolerances": {"real_tol": tol},
            "c": S.c,
            "depth": depth,
            "a": list(J.a),
            "bsq": list(J.bsq),
        }
    )
    return 0


def cmd_shift(args):
    doc = _read_document(args.input)
    _reject_unknown(doc, {"c", "steps"})
    c = _require(doc, "c", "number")
    steps = _require(doc, "steps", "pair_list")
    S = shift_chain(c, steps)
    emit(
        {
            "tolerances": {},
            "c": c,
            "F": [complex(v) for v in S.F.c],
            "kappa": complex(S.kappa),
            "G": [complex(v) for v in S.G.c],
            "deg_F": S.F.degree,
            "deg_G": S.G.degree,
            "mass": complex(S.mass()),
        }
    )
    return 0


def _solution_record(s, c, report_entry):
    is_real, is_pos, reasons = report_entry
    rec = {
        "alpha": complex(s.alpha),
        "beta": complex(s.beta),
        "valid": s.valid,
        "is_real": is_real,
        "is_positive": is_pos,
        "reasons": list(reasons),
    }
    if hasattr(s, "sigma"):
        rec["sigma"] = complex(s.sigma)
        rec["branch"] = s.branch
    if hasattr(s, "gamma"):
        rec["gamma"] = complex(s.gamma)
        rec["delta"] = complex(s.delta)
        rec["Delta"] = complex(s.Delta)
        rec["family"] = s.family
        if s.r is not None:
            rec["r"] = complex(s.r)
    return rec


def cmd_invert_roots(args):
    doc = _read_document(args.input)
    _reject_unknown(
        doc, {"mode", "c", "roots", "zeta", "family", "beta", "alpha", "gamma", "lam"}
    )
    mode = _require(doc, "mode", "str")
    c = _require(doc, "c", "number")
    if mode == "one-shift":
        roots = _require(doc, "roots", "cnum_list")
        if len(roots) != 2:
            raise ValidationError("document.roots: one-shift needs exactly two roots")
        sols = one_shift_from_roots(roots[0], roots[1], c)
        report = classify_positivity(sols, c)
        records = [
            _solution_record(s, c, e)
            for s, e in zip(sols.solutions, report.per_solution)
        ]
        emit(
            {
                "tolerances": {"reconstruction": 1e-8},
                "mode": mode,
                "degenerate": sols.degenerate,
                "solutions": records,
                "counts": {
                    "positive": report.counts[0],
                    "real": report.counts[1],
                    "total": report.counts[2],
                },
                "expected_positive": report.expected_positive,
            }
        )
        return 0
    if mode not in ("deg4", "deg3"):
        raise ValidationError(f"document.mode: unknown mode {mode!r}")
    zeta = _require(doc, "zeta", "cnum")
    family = _check(doc["family"], "str", "document.family") if "family" in doc else None
    kw = {}
    for name in ("beta", "alpha", "gamma", "lam"):
        if name in doc:
            kw[name] = _check(doc[name], "cnum", f"document.{name}")
    if mode == "deg4":
        kw.pop("gamma", None)
        kw.pop("lam", None)
        sols = two_shift_even_quartic(zeta, c, family=family, **kw)
    else:
        if family is None:
            raise ValidationError("document.family: required for deg3 mode")
        sols = two_shift_deg3(zeta, c, family, **kw)
    report = classify_positivity(sols, c)
    records = [_solution_record(s, c, e) for s, e in zip(sols, report.per_solution)]
    emit(
        {
            "tolerances": {"reconstruction": 1e-8},
            "mode": mode,
            "solutions": records,
            "counts": {
                "positive": report.counts[0],
                "real": report.counts[1],
                "total": report.counts[2],
            },
        }
    )
    return 0


def _write_csv(path, header, rows):
    if path is None:
        raise ValidationError("--out PATH is required for grid output")
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt_float(v) for v in row) + "\n")


def cmd_density(args):
    doc = _read_document(args.input)
    _reject_unknown(doc, {"transform", "Q", "c"})
    if "transform" in doc:
        S = build_transform(doc["transform"])
    else:
        c = _require(doc, "c", "number")
        Q = Poly(np.asarray(_require(doc, "Q", "cnum_list")))
        S = stieltjes_from_density(Q, c)
    spec = decompose_measure(S)
    h = support_halfwidth(spec.c)
    n = args.grid
    ts = np.linspace(-h, h, n)
    dens = spec.density(ts)
    _write_csv(args.out, ["t", "density"], zip(ts, dens))
    grid_mass = float(np.trapezoid(dens, ts))
    emit(
        {
            "tolerances": {"atom_drop": 1e-10},
            "c": spec.c,
            "signed": spec.signed,
            "atoms": [[loc, wt] for loc, wt in spec.atoms],
            "total_mass": spec.total_mass,
            "grid_points": n,
            "grid_continuum_mass": grid_mass,
            "csv": args.out,
        }
    )
    return 0


def cmd_residue(args):
    doc = _read_document(args.input)
    _reject_unknown(doc, {"Q", "c"})
    c = _require(doc, "c", "number")
    Q = Poly(np.asarray(_require(doc, "Q", "cnum_list")))
    R = residue_polynomial(Q, c)
    terms = pole_terms(Q, c)
    S = stieltjes_from_density(Q, c)
    emit(
        {
            "tolerances": {},
            "c": c,
            "residue_poly": [complex(v) for v in R.c],
            "pole_terms": [
                {
                    "zeta": complex(z),
                    "multiplicity": m,
                    "q": [complex(v) for v in q.c],
                }
                for z, m, q in terms
            ],
            "F": [complex(v) for v in S.F.c],
            "kappa": complex(S.kappa),
            "G": [complex(v) for v in S.G.c],
            "mass": complex(S.mass()),
            "normalization": normalize_general(Q, c),
        }
    )
    return 0


def cmd_perturb(args):
    doc = _read_document(args.input)
    _reject_unknown(doc, {"c", "steps", "N", "points"})
    c = _require(doc, "c", "number")
    chain = _require(doc, "steps", "pair_list")
    n = _check(doc["N"], "int", "document.N") if "N" in doc else 400
    points = (
        _check(doc["points"], "cnum_list", "document.points")
        if "points" in doc
        else [2j]
    )
    real_chain = []
    for a, b in chain:
        if abs(a.imag) > 0 or abs(b.imag) > 0:
            raise ValidationError("document.steps: perturbation chain must be real")
        real_chain.append((a.real, b.real))
    steps = n_shift_perturbation(c, real_chain)
    T = apply_steps(semicircle_matrix(c, n), steps)
    S = shift_chain(c, real_chain)
    rows = []
    max_diff = 0.0
    for w in points:
        rv = resolvent00(T, w)
        av = S.eval(w)
        diff = abs(rv - av)
        max_diff = max(max_diff, diff)
        rows.append((w.real, w.imag, rv.real, rv.imag, av.real, av.imag, diff))
    _write_csv(
        args.out,
        ["w_re", "w_im", "resolvent_re", "resolvent_im", "analytic_re", "analytic_im", "abs_diff"],
        rows,
    )
    out = {
        "tolerances": {},
        "c": c,
        "N": n,
        "steps": [{"k": s.k, "p": s.p, "q": s.q} for s in steps],
        "max_abs_diff": max_diff,
        "csv": args.out,
    }
    if args.paper_signs:
        literal = paper_literal_pq(
            c,
            real_chain[0][0],
            real_chain[0][1],
            *(real_chain[1] if len(real_chain) > 1 else (None, None)),
        ) if len(real_chain) <= 2 else None
        out["paper_literal_pq"] = (
            [[complex(p), complex(q)] for p, q in literal] if literal else None
        )
    emit(out)
    return 0


def cmd_verify(args):
    # the document is optional for verify; stdin is only read when a path
    # is given explicitly
    doc = _read_document(args.input) if args.input != "-" else {}
    if doc:
        _reject_unknown(doc, {"suites"})
    names = None
    if "suites" in doc:
        if not isinstance(doc["suites"], list) or not all(
            isinstance(s, str) for s in doc["suites"]
        ):
            raise ValidationError("document.suites: expected a list of suite names")
        names = doc["suites"]
    try:
        results = verify_mod.run_suites(names, seed=args.seed)
    except KeyError as exc:
        raise ValidationError(str(exc)) from None
    emit(
        {
            "tolerances": {"seed": args.seed},
            "suites": [
                {"name": name, "passed": ok, "detail": detail}
                for name, ok, detail in results
            ],
            "all_passed": all(ok for _, ok, _ in results),
        }
    )
    return 0 if all(ok for _, ok, _ in results) else 4


COMMANDS = {
    "expand": cmd_expand,
    "shift": cmd_shift,
    "invert-roots": cmd_invert_roots,
    "density": cmd_density,
    "residue": cmd_residue,
    "perturb": cmd_perturb,
    "verify": cmd_verify,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="semishift",
        description="Continued-fraction and residue-calculus numerics for "
        "shifted semicircle distributions.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--input", default="-", help="JSON document path or - for stdin")
    parser.add_argument("--out", default=None, help="CSV output path for grid commands")
    parser.add_argument("--tol", type=float, default=None, help="tolerance override")
    parser.add_argument("--depth", type=int, default=4, help="expansion depth")
    parser.add_argument("--grid", type=int, default=101, help="grid point count")
    parser.add_argument("--seed", type=int, default=0, help="seed for verify suites")
    parser.add_argument(
        "--paper-signs",
        action="store_true",
        help="also report the literal-text perturbation parameters",
    )
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 3
    except InternalError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 4
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except SemishiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
