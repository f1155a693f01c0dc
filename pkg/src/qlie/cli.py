"""Command-line front end.

Every subcommand prints one result document (JSON by default, sorted keys) on
stdout.  Failures print ``{"error": {"code": ..., "message": ...}}`` and exit
with 2 for bad input, 3 for a broken internal invariant.  ``selftest`` exits 1
when any group fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from . import exalg, matmodel, partition, qarith, qgroup, rootsys, weylgrp
from .selftest import run_selftest

MONTE_CARLO = {"haar-mc", "matrix-model"}


class UsageError(Exception):
    def __init__(self, message: str, code: str = "invalid_parameter"):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        code = "unknown_subcommand" if "invalid choice" in message else "usage"
        raise UsageError(message, code)


# ---------------------------------------------------------------------------
# parsing helpers


def _lie_type(args, rank_from_n: bool = True) -> rootsys.LieType:
    if not args.type:
        raise UsageError("--type is required")
    text = args.type.strip()
    if re.fullmatch(r"[A-Ga-g]", text):
        if args.n is None or not rank_from_n:
            raise UsageError(f"--type {text} needs a rank, e.g. {text.upper()}2 or --n")
        text = f"{text}{args.n}"
    return rootsys.LieType.parse(text)


def _ints(text: str | None, what: str) -> tuple[int, ...]:
    if text is None:
        raise UsageError(f"{what} is required")
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


def _floats(text: str | None, what: str) -> list[float]:
    if text is None:
        raise UsageError(f"{what} is required")
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated numbers, got {text!r}") from None


def _fractions(text: str, what: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{what} must be comma-separated rationals, got {text!r}") from None


def _q_value(text: str | None):
    """'symbolic' -> None; rationals stay exact; anything else becomes complex."""
    if text is None or text == "symbolic":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        z = complex(text.replace(" ", ""))
    except ValueError:
        raise UsageError(f"cannot parse --q {text!r}") from None
    return z.real if z.imag == 0 else z


def _need_numeric_q(args):
    q = _q_value(args.q)
    if q is None:
        raise UsageError("this subcommand needs a numeric --q", "numeric_q_required")
    return q


def _spectrum(args) -> list[complex]:
    import cmath

    return [cmath.exp(1j * t) for t in _floats(args.angles, "--angles")]


def _coeff_map(text: str, u1: bool) -> dict:
    """'label=coef;label=coef' with labels like '', '1' or '2,1' (charges when u1)."""
    out = {}
    for item in text.split(";"):
        if not item.strip():
            continue
        if "=" not in item:
            raise UsageError(f"coefficient entry {item!r} must look like label=value")
        label, value = item.split("=", 1)
        try:
            c = complex(value.strip().replace(" ", ""))
        except ValueError:
            raise UsageError(f"bad coefficient {value!r}") from None
        key = int(label) if u1 else qgroup.validate_partition(_ints(label, "label"))
        out[key] = c
    return out


# ---------------------------------------------------------------------------
# serialisation


def _num(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    return x


def _vec(v) -> list:
    return [_num(x) for x in v]


def _poly_out(p: qarith.LaurentPoly, q) -> object:
    return p.to_text() if q is None else _num(qarith.evaluate(p, q))


# ---------------------------------------------------------------------------
# subcommands


def cmd_roots(args):
    rs = rootsys.generate_roots(_lie_type(args))
    out = {
        "type": str(rs.type),
        "rank": rs.rank,
        "num_roots": len(rs.roots),
        "num_positive_roots": len(rs.positive_roots),
        "simple_roots": [_vec(a) for a in rs.simple_roots],
        "highest_root": _vec(rs.highest_root()),
        "weyl_vector": _vec(rs.weyl_vector),
        "dimension": rootsys.lie_dimension(rs.type),
    }
    h, hv = rootsys.coxeter_numbers(rs.type)
    out.update(coxeter_number=h, dual_coxeter_number=hv)
    if args.all:
        out["roots"] = [_vec(a) for a in rs.roots]
    return out


def cmd_cartan(args):
    t = _lie_type(args)
    return {"type": str(t), "cartan": [list(r) for r in rootsys.cartan_matrix(t)]}


def cmd_qcartan(args):
    t = _lie_type(args)
    q = _q_value(args.q)
    return {"type": str(t), "q_cartan": [[_poly_out(p, q) for p in row] for row in qgroup.q_cartan(t)]}


def cmd_weyl_order(args):
    t = _lie_type(args)
    order = weylgrp.weyl_order(t)
    out = {"type": str(t), "order": order, "degrees": list(weylgrp.fundamental_degrees(t))}
    out["enumerated"] = t.rank <= weylgrp.ENUMERATION_RANK
    if args.check:
        chain = weylgrp.order_by_stabilizer_chain(rootsys.generate_roots(t).simple_roots)
        if chain != order:
            raise ArithmeticError(f"stabiliser chain gives {chain}, degrees give {order}")
        out["stabilizer_chain_order"] = chain
    return out


def cmd_orbit(args):
    t = _lie_type(args)
    rs = rootsys.generate_roots(t)
    if args.weight is not None:
        seed = rs.weight(_ints(args.weight, "--weight"))
    elif args.vector is not None:
        seed = _fractions(args.vector, "--vector")
    else:
        raise UsageError("orbit needs --weight (Dynkin labels) or --vector (ambient coordinates)")
    res = weylgrp.orbit(t, seed, words=args.all)
    out = {"type": str(t), "seed": _vec(res.seed), "orbit_size": res.orbit_size}
    if args.all:
        out["points"] = [_vec(p) for p in res.points]
        out["words"] = [list(w) for w in res.representative_words]
    return out


def cmd_catalan(args):
    if args.n is None:
        raise UsageError("--n is required")
    return {"k": args.n, "catalan": weylgrp.catalan(args.n)}


def cmd_weyl_catalan(args):
    t = _lie_type(args)
    return {"type": str(t), "catalan": weylgrp.weyl_catalan(t)}


def cmd_lattice_aut(args):
    t = _lie_type(args)
    out = {
        "type": str(t),
        "order": weylgrp.lattice_automorphism_order(t),
        "weyl_order": weylgrp.weyl_order(t),
        "diagram_automorphisms": rootsys.diagram_automorphism_count(t),
    }
    out["isometry_search"] = t.rank <= weylgrp.ENUMERATION_RANK
    return out


def cmd_qnum(args):
    if args.n is None:
        raise UsageError("--n is required")
    q = _q_value(args.q)
    return {"n": args.n, "length_sq": args.length_sq, "value": _poly_out(qarith.q_number(args.n, args.length_sq), q)}


def cmd_qfact(args):
    if args.n is None:
        raise UsageError("--n is required")
    q = _q_value(args.q)
    return {"n": args.n, "value": _poly_out(qarith.q_factorial(args.n, args.length_sq), q)}


def cmd_qbinom(args):
    if args.n is None or args.k is None:
        raise UsageError("--n and --k are required")
    q = _q_value(args.q)
    return {"n": args.n, "k": args.k, "value": _poly_out(qarith.q_binomial(args.n, args.k, args.length_sq), q)}


def cmd_qdim(args):
    q = _q_value(args.q)
    family = args.type.strip().upper() if args.type else ""
    if family == "A" and args.partition is not None:
        if args.n is None:
            raise UsageError("--type A with --partition needs --n (the N of U(N))")
        lam = _ints(args.partition, "--partition")
        p = qgroup.qdim_typeA(lam, args.n)
        return {"N": args.n, "partition": list(qgroup.validate_partition(lam)), "qdim": _poly_out(p, q)}
    t = _lie_type(args)
    hw = _ints(args.weight, "--weight")
    p = qgroup.qdim_roots(hw, t)
    return {"type": str(t), "highest_weight": list(hw), "qdim": _poly_out(p, q)}


def cmd_uq_check(args):
    if args.dim is not None:
        rep = qgroup.build_sl2_rep(args.dim)
        label = f"sl2 dim {args.dim}"
    else:
        if args.n is None:
            raise UsageError("uq-check needs --dim (sl2 irrep) or --n (sl_n fundamental)")
        rep = qgroup.build_sln_fundamental(args.n)
        label = f"sl{args.n} fundamental"
    report = qgroup.check_relations(rep, fast=args.fast)
    return {
        "representation": label,
        "mode": report.mode,
        "passed": report.passed,
        "structural_errors": list(report.structural_errors),
        "relations": report.summary(),
        "failures": [
            {"relation": r.relation, "i": r.i, "j": r.j, "witness": str(r.witness)} for r in report.failed()
        ],
    }


def cmd_character(args):
    spec = _spectrum(args)
    if args.charge:
        label = _ints(args.partition, "--partition")
        if len(label) != 1:
            raise UsageError("--charge needs a single integer")
        label = label[0]
    else:
        label = _ints(args.partition or "", "--partition")
    value = partition.character(label, spec, method=args.method)
    return {"label": label if isinstance(label, int) else list(label), "angles": _floats(args.angles, "--angles"),
            "character": _num(value)}


def cmd_zqym(args):
    q = _need_numeric_q(args)
    if args.n is None or args.cutoff is None:
        raise UsageError("--n and --cutoff are required")
    res = partition.z_qym(args.n, q, _spectrum(args), args.cutoff)
    return {"N": args.n, "cutoff": res.cutoff, "terms": res.terms, "value": _num(res.value)}


def cmd_zbh(args):
    if not args.coeffs:
        raise UsageError("--coeffs is required, e.g. '=1;1=2'")
    u1 = args.n == 1
    stacks = [_coeff_map(c, u1) for c in args.coeffs]
    if len(stacks) == 1:
        return {"stacks": 1, "value": partition.z_blackhole(stacks[0])}
    return {"stacks": len(stacks), "value": partition.z_blackhole_multistack(stacks)}


def cmd_haar_mc(args):
    n = args.n if args.n is not None else 2
    if args.coeffs:
        coeffs = _coeff_map(args.coeffs[0], n == 1)
        est, err = partition.z_blackhole_mc(coeffs, n, args.samples, args.seed)
        return {"N": n, "samples": args.samples, "seed": args.seed, "estimate": est, "stderr": err,
                "exact": partition.z_blackhole(coeffs)}
    if args.r1 is None or args.r2 is None:
        raise UsageError("haar-mc needs --r1 and --r2, or --coeffs")
    r1, r2 = _ints(args.r1, "--r1"), _ints(args.r2, "--r2")
    est, err = partition.haar_mc_overlap(r1, r2, n, args.samples, args.seed)
    return {"N": n, "samples": args.samples, "seed": args.seed, "estimate": _num(est), "stderr": err}


def cmd_multicenter(args):
    k_max = args.k_max if args.k_max is not None else args.cutoff
    if k_max is None:
        raise UsageError("--k-max is required")
    return {"k_max": k_max, "value": partition.multicenter_sum(_floats(args.entropies, "--entropies"), k_max)}


def cmd_coupling_q(args):
    if args.beta_eta is None:
        raise UsageError("--beta-eta is required")
    try:
        be = complex(args.beta_eta.replace(" ", ""))
    except ValueError:
        raise UsageError(f"cannot parse --beta-eta {args.beta_eta!r}") from None
    g, q = partition.coupling_to_q(be)
    return {"beta_eta": _num(be), "g": _num(g), "q": _num(q)}


def _model_spec(args) -> matmodel.ModelSpec:
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            return matmodel.ModelSpec.from_json(json.load(fh))
    t = _lie_type(args)
    sizes = _ints(args.sizes, "--sizes") if args.sizes else (1,) * t.rank
    pot = tuple(_floats(args.potential, "--potential")) if args.potential else (0.0, 0.0, 0.5)
    return matmodel.ModelSpec(t, sizes, (pot,) * t.rank, args.g, args.epsilon or 0.0, args.use_cartan)


def cmd_matrix_model(args):
    spec = _model_spec(args)
    if args.method == "quadrature":
        est = matmodel.quadrature_oracle(spec, args.grid)
    else:
        est = matmodel.z_matrix_model(spec, args.samples, args.seed)
    return {"type": str(spec.type), "node_sizes": list(spec.node_sizes), "g": spec.g, "epsilon": spec.epsilon,
            "method": est.method, "value": est.value, "stderr": est.stderr, "samples": est.samples,
            "seed": est.seed}


def cmd_octonion(args):
    o = exalg.octonion_algebra()
    table = []
    for i in range(o.dim):
        row = []
        for j in range(o.dim):
            (k, c), = [(k, c) for k, c in enumerate(o.mul[i][j]) if c]
            row.append(f"{'-' if c < 0 else ''}e{k}")
        table.append(row)
    return {"dim": o.dim, "table": table}


def _algebra(args):
    tag = (args.algebra or "O").upper()
    if tag == "J":
        return tag, exalg.jordan_h3o()
    return tag, exalg.division_algebra(tag)


def cmd_derivations(args):
    tag, alg = _algebra(args)
    return {"algebra": tag, "dim": alg.dim, "derivation_dim": exalg.derivation_dimension(alg)}


def cmd_triality(args):
    tag = (args.algebra or "O").upper()
    return {"algebra": tag, "triality_dim": exalg.triality_dimension(tag)}


def cmd_magic_square(args):
    cells = exalg.magic_square_check()
    return {"cells": [c.to_json() for c in cells],
            "inconsistent": [f"{c.row}{c.col}" for c in cells if not c.consistent]}


def cmd_clifford(args):
    if args.n is None:
        raise UsageError("--n is required")
    gens, span = exalg.clifford_tower(args.n)
    size = len(gens[0]) if gens else 1
    return {"n": args.n, "matrix_size": size, "span_dim": span, "generators": gens if args.all else None}


def cmd_bott(args):
    if args.n is None:
        raise UsageError("--n is required")
    return {"n": args.n, "pi_n": exalg.bott_homotopy(args.n)}


def cmd_selftest(args):
    results = run_selftest()
    return {"groups": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
            "passed": all(r.passed for r in results)}


COMMANDS = {
    "roots": (cmd_roots, "root system summary (num_roots, highest root, Coxeter numbers)"),
    "cartan": (cmd_cartan, "Cartan matrix A[i][j] = 2(a_i,a_j)/(a_j,a_j)"),
    "qcartan": (cmd_qcartan, "entrywise q-numbers [A_ij]_q"),
    "weyl-order": (cmd_weyl_order, "Weyl group order"),
    "orbit": (cmd_orbit, "Weyl orbit of a weight or vector"),
    "catalan": (cmd_catalan, "ordinary Catalan number C_n"),
    "weyl-catalan": (cmd_weyl_catalan, "generalized Catalan number prod (h+d_i)/d_i"),
    "lattice-aut": (cmd_lattice_aut, "order of the root-system automorphism group"),
    "qnum": (cmd_qnum, "q-number [n]"),
    "qfact": (cmd_qfact, "q-factorial [n]!"),
    "qbinom": (cmd_qbinom, "q-binomial [n choose k]"),
    "qdim": (cmd_qdim, "quantum dimension (partition for U(N), or Dynkin labels)"),
    "uq-check": (cmd_uq_check, "check quantum-group relations on a built representation"),
    "character": (cmd_character, "U(N) character at a holonomy"),
    "zqym": (cmd_zqym, "truncated q-deformed Yang-Mills sum"),
    "zbh": (cmd_zbh, "black-hole norm sum |c_R|^2 (one --coeffs per stack)"),
    "haar-mc": (cmd_haar_mc, "Haar Monte Carlo over U(2) (needs --seed)"),
    "multicenter": (cmd_multicenter, "Catalan-weighted multi-center sum"),
    "coupling-q": (cmd_coupling_q, "map beta*eta to (g, q)"),
    "matrix-model": (cmd_matrix_model, "eigenvalue integral by Monte Carlo (needs --seed) or quadrature"),
    "octonion": (cmd_octonion, "octonion multiplication table"),
    "derivations": (cmd_derivations, "dimension of the derivation algebra"),
    "triality": (cmd_triality, "dimension of the triality algebra"),
    "magic-square": (cmd_magic_square, "magic-square dimensions against the Lie-type label of each cell"),
    "clifford": (cmd_clifford, "Clifford generators and the dimension of their span"),
    "bott": (cmd_bott, "pi_n of the stable orthogonal group"),
    "selftest": (cmd_selftest, "fast invariant suite"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="Lie type, e.g. E8, or a family letter with --n")
    common.add_argument("--n", type=int, help="rank, N of U(N), or the integer argument")
    common.add_argument("--k", type=int, help="lower index of qbinom")
    common.add_argument("--partition", help="comma-separated partition, e.g. 2,1")
    common.add_argument("--weight", help="comma-separated Dynkin labels")
    common.add_argument("--vector", help="comma-separated ambient coordinates")
    common.add_argument("--q", help="'symbolic' (default) or a number")
    common.add_argument("--length-sq", type=int, default=2, help="(a,a) of the root for q-numbers")
    common.add_argument("--cutoff", type=int, help="representation cutoff")
    common.add_argument("--k-max", type=int, help="largest number of centers")
    common.add_argument("--seed", type=int)
    common.add_argument("--samples", type=int, default=100_000)
    common.add_argument("--epsilon", type=float)
    common.add_argument("--grid", type=int, default=200, help="quadrature points per dimension")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--angles", help="holonomy eigenvalue angles, comma-separated")
    common.add_argument("--charge", action="store_true", help="treat --partition as a U(1) charge")
    common.add_argument("--method", default=None)
    common.add_argument("--coeffs", action="append", help="label=value;... (repeat for stacks)")
    common.add_argument("--r1")
    common.add_argument("--r2")
    common.add_argument("--entropies")
    common.add_argument("--beta-eta")
    common.add_argument("--dim", type=int, help="dimension of the sl2 irrep for uq-check")
    common.add_argument("--fast", action="store_true", help="evaluation-based relation check")
    common.add_argument("--sizes", help="matrix-model node sizes, comma-separated")
    common.add_argument("--potential", help="coefficients c0,c1,... of V, shared by all nodes")
    common.add_argument("--g", type=float, default=1.0)
    common.add_argument("--use-cartan", action="store_true")
    common.add_argument("--config", help="JSON model specification")
    common.add_argument("--algebra", help="R, C, H, O or J (exceptional Jordan)")
    common.add_argument("--check", action="store_true", help="extra independent cross-check")
    common.add_argument("--all", action="store_true", help="include full point/root/generator lists")

    parser = _Parser(prog="qlie", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def _validate(args):
    if args.command in MONTE_CARLO and not (args.command == "matrix-model" and args.method == "quadrature"):
        if args.seed is None:
            raise UsageError(f"{args.command} requires --seed", "seed_required")
        if args.q == "symbolic":
            raise UsageError(f"{args.command} does not accept symbolic q", "symbolic_q_forbidden")
    if args.command == "character" and args.method is None:
        args.method = "jacobi_trudi"
    if args.command == "matrix-model" and args.method is None:
        args.method = "monte_carlo"


def _flatten(prefix: str, value, rows: list):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else k, value[k], rows)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, rows)
    else:
        rows.append((prefix, value if not isinstance(value, (list, tuple)) else json.dumps(value)))


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    rows: list = []
    _flatten("", doc, rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerows(rows)
        return buf.getvalue()
    return "".join(f"{k}: {v}\n" for k, v in rows)


def _error(code: str, message: str) -> dict:
    return {"error": {"code": code, "message": message}}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    fmt = "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        _validate(args)
        doc = COMMANDS[args.command][0](args)
        status = 0
        if args.command == "selftest" and not doc["passed"]:
            status = 1
    except UsageError as exc:
        doc, status = _error(exc.code, str(exc)), 2
    except (ValueError, KeyError, ZeroDivisionError, weylgrp.GroupTooLarge, OSError) as exc:
        doc, status = _error("invalid_parameter", f"{type(exc).__name__}: {exc}"), 2
    except (ArithmeticError, AssertionError) as exc:
        doc, status = _error("invariant_breach", f"{type(exc).__name__}: {exc}"), 3
    sys.stdout.write(render(doc, fmt))
    return status


if __name__ == "__main__":
    sys.exit(main())
