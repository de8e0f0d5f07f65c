"""Command-line front end.

    idealproj eta data/example1.json
    idealproj interpolate data/example1.json --function "1 + (1-x1)^4 + (1-x2)^4" --perturb 1/10
    idealproj converge data/example1.json --function "..." --h-list 1/10,1/100,1/1000
    idealproj verify --trials 200 --seed 0
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .differences import binomial_sum, random_case, verify_difference_lemmas
from .errors import IdealProjError
from .escalier import range_lex, range_lex_perturbed
from .parsing import parse_polynomial
from .poly import format_rational, parse_rational
from .problem import algebraic_multiset, eta0_squared, format_bound, load_problem, perturbed_sites
from .projector import border_basis, convergence_table, hermite_interpolant, lagrange_interpolant
from .tree import algorithm1_eta, build_tree, dump_tree

__all__ = ["RunConfig", "main", "parse_h_list", "run"]

COMMANDS = ("escalier", "eta", "interpolate", "converge", "border", "tree", "verify")


@dataclass
class RunConfig:
    command: str
    problem: str | None = None
    function: str | None = None
    perturb: Fraction | None = None
    h_list: list[Fraction] = field(default_factory=list)
    output: str = "table"
    tree_format: str = "ascii"
    decimal: bool = False
    trials: int = 200
    seed: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.perturb is not None and self.perturb == 0:
            raise ValueError("--perturb must be nonzero")
        if any(h == 0 for h in self.h_list):
            raise ValueError("--h-list entries must be nonzero")


def parse_h_list(text: str) -> list[Fraction]:
    text = text.strip()
    if not text:
        return []
    return [parse_rational(part) for part in text.split(",")]


def _envelope(command, result) -> str:
    return json.dumps({"command": command, "result": result}) + "\n"


def _poly_json(p):
    return {
        "text": str(p),
        "terms": [[list(a), format_rational(c)] for a, c in p.items()],
    }


def _need(cfg, attr, flag):
    value = getattr(cfg, attr)
    if value is None:
        raise ValueError(f"{cfg.command} requires {flag}")
    return value


def _cmd_escalier(cfg, problem):
    if cfg.perturb is None:
        esc = range_lex(problem)
    else:
        esc = range_lex_perturbed(problem, cfg.perturb)
    if cfg.output == "json":
        return _envelope("escalier", [list(m) for m in esc])
    return f"{esc}\n"


def _cmd_eta(cfg, problem):
    eta = algorithm1_eta(problem)
    eta0sq = eta0_squared(problem)
    if cfg.output == "json":
        return _envelope("eta", {"eta": format_bound(eta), "eta0_squared": format_bound(eta0sq)})
    return f"eta = {format_bound(eta)}\neta0^2 = {format_bound(eta0sq)}\n"


def _cmd_interpolate(cfg, problem):
    f = parse_polynomial(_need(cfg, "function", "--function"), problem.dimension)
    if cfg.perturb is None:
        interp = hermite_interpolant(problem, f)
    else:
        interp = lagrange_interpolant(problem, cfg.perturb, f)
    if cfg.output == "json":
        result = _poly_json(interp.polynomial)
        result["h"] = None if interp.h is None else format_rational(interp.h)
        return _envelope("interpolate", result)
    label = "P f" if interp.h is None else f"P_{format_rational(interp.h)} f"
    return f"{label} = {interp.polynomial}\n"


def _cmd_converge(cfg, problem):
    f = parse_polynomial(_need(cfg, "function", "--function"), problem.dimension)
    table = convergence_table(problem, f, cfg.h_list)
    if cfg.output == "json":
        return _envelope("converge", table.to_dict())
    return table.render(decimal=cfg.decimal)


def _cmd_border(cfg, problem):
    bb = border_basis(problem, cfg.perturb)
    if cfg.output == "json":
        return _envelope(
            "border",
            [{"border": list(b), "element": _poly_json(g)} for b, g in bb],
        )
    return "".join(f"{g}\n" for _, g in bb)


def _cmd_tree(cfg, problem):
    if cfg.perturb is None:
        tree = build_tree(algebraic_multiset(problem))
    else:
        tree = build_tree(perturbed_sites(problem, cfg.perturb))
    text = dump_tree(tree, cfg.tree_format)
    if cfg.output == "json":
        return _envelope("tree", text)
    return text


def _cmd_verify(cfg):
    lines = []
    failures = []
    identity_ok = True
    for i in range(1, 13):
        for m in range(1, i + 1):
            expected = math.factorial(i)
            if binomial_sum(i, m) != (expected if m == i else 0):
                identity_ok = False
                failures.append(f"binomial_sum({i}, {m}) = {binomial_sum(i, m)}")
    lines.append(f"binomial identity 1<=m<=i<=12: {'PASS' if identity_ok else 'FAIL'}")

    rng = random.Random(cfg.seed)
    counts = dict.fromkeys(("low-order", "derivative", "no-remainder", "tensor"), 0)
    for t in range(cfg.trials):
        p, xi, i = random_case(rng)
        rep = verify_difference_lemmas(p, xi, i)
        checks = {
            "low-order": rep.low_order_vanishing,
            "derivative": rep.matched_derivative,
            "no-remainder": rep.has_less_m or rep.exact_no_remainder,
            "tensor": rep.tensor_consistent,
        }
        for name, ok in checks.items():
            counts[name] += ok
        if not rep.passed:
            xs = ",".join(format_rational(c) for c in xi)
            failures.append(f"trial {t}: p = {p}; xi = ({xs}); i = {i}; expansion = {rep.result}")
    lines.append(f"{'check':<14}{'passed':>8}{'trials':>8}  status")
    for name, n in counts.items():
        status = "PASS" if n == cfg.trials else "FAIL"
        lines.append(f"{name:<14}{n:>8}{cfg.trials:>8}  {status}")
    if failures:
        lines.append("counterexamples:")
        lines.extend(f"  {msg}" for msg in failures)
    return "\n".join(lines) + "\n", not failures


_HANDLERS = {
    "escalier": _cmd_escalier,
    "eta": _cmd_eta,
    "interpolate": _cmd_interpolate,
    "converge": _cmd_converge,
    "border": _cmd_border,
    "tree": _cmd_tree,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns ``(exit status, emitted text)``."""
    try:
        if cfg.command == "verify":
            text, ok = _cmd_verify(cfg)
            if cfg.output == "json":
                text = _envelope("verify", {"passed": ok, "report": text})
            return (0 if ok else 1), text
        if cfg.problem is None:
            raise ValueError(f"{cfg.command} requires a problem file")
        problem = load_problem(cfg.problem)
        return 0, _HANDLERS[cfg.command](cfg, problem)
    except (IdealProjError, ValueError, OSError) as exc:
        return 1, f"error: {exc}\n"


def _rational_arg(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _h_list_arg(text):
    try:
        return parse_h_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealproj",
        description="Exact Hermite projectors, their Lagrange perturbations and escaliers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, function=False, perturb=True):
        p.add_argument("problem", help="problem JSON file")
        if perturb:
            p.add_argument("--perturb", type=_rational_arg, metavar="H",
                           help="use the h-perturbed Lagrange projector")
        if function:
            p.add_argument("--function", required=True, metavar="EXPR",
                           help='polynomial, e.g. "1 + (1-x1)^4 + (1-x2)^4"')
        p.add_argument("--format", dest="output", choices=("table", "json"), default="table")

    common(sub.add_parser("escalier", help="lex Groebner escalier"))
    common(sub.add_parser("eta", help="tree-based eta bound and eta0^2"), perturb=False)
    common(sub.add_parser("interpolate", help="P f or P_h f"), function=True)
    conv = sub.add_parser("converge", help="P_h f over a list of h")
    common(conv, function=True, perturb=False)
    conv.add_argument("--h-list", type=_h_list_arg, default=[], metavar="H1,H2,...")
    conv.add_argument("--decimal", action="store_true", help="add a decimal preview column")
    common(sub.add_parser("border", help="border basis of the kernel"))
    tree = sub.add_parser("tree", help="tree of the algebraic multiset (or of Xi_h)")
    common(tree)
    tree.add_argument("--tree-format", choices=("ascii", "dot"), default="ascii")
    ver = sub.add_parser("verify", help="finite-difference lemma oracles")
    ver.add_argument("--trials", type=int, default=200)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--format", dest="output", choices=("table", "json"), default="table")
    return parser


def main(argv=None) -> int:
    args = vars(build_parser().parse_args(argv))
    try:
        cfg = RunConfig(**args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    status, text = run(cfg)
    (sys.stdout if status == 0 else sys.stderr).write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
