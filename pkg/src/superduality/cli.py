"""Command-line front end.

Every numeric option is an integer. Half-integer quantities are passed
doubled: a dg rank r is given as 2r, and tail vertex indices follow the
stored doubled convention t{tail}:{2r}.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import cartan, chars, coxkl, oracle, reflect, symfunc, weights
from .errors import DomainError, ResourceGuardError

EXIT_OK, EXIT_DOMAIN, EXIT_GUARD, EXIT_USAGE = 0, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


@dataclass
class Output:
    """A command result in both output formats."""

    data: object
    text: str


# --- input helpers -----------------------------------------------------------------------

def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc


def _load_matrix(args) -> cartan.Sgcm:
    if getattr(args, "matrix", None):
        data = _read_json(args.matrix)
        if isinstance(data, dict) and "vertices" in data:
            return cartan.DynkinDiagram.from_json(data).to_sgcm()
        return cartan.Sgcm.from_json(data)
    if getattr(args, "diagram", None):
        return cartan.DynkinDiagram.from_json(_read_json(args.diagram)).to_sgcm()
    if getattr(args, "preset", None):
        return cartan.matrix_preset(args.preset)
    raise DomainError("give --matrix, --diagram or --preset")


def _rank(value: int, flavor: str):
    """Undo the doubling of dg ranks."""
    return Fraction(value, 2) if flavor == "dg" else value


def _parse_ints(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise DomainError(f"expected comma separated integers, got {text!r}") from exc


def _parse_names(text: str | None) -> list[str]:
    return [p.strip() for p in text.split(",") if p.strip()] if text else []


def _load_weight(source: str, head: cartan.HeadSpec | None = None, flavor: str = "g") -> weights.Weight:
    """'trivial', 'partition:2,1' (type A heads) or a weight JSON file."""
    if source == "trivial":
        return weights.Weight()
    if source.startswith("partition:"):
        if head is None:
            raise DomainError("partition weights need a head preset")
        nu = symfunc.partition(_parse_ints(source.split(":", 1)[1]))
        weight = weights.gl_partition_weight(nu, len(head.head_ids()) + 1)
        return weights.natural_map(weight) if flavor == "sg" else weight
    return weights.weight_from_json(_read_json(source))


def _weight_text(weight: weights.Weight) -> str:
    return weights.format_terms(weight.items())


def _character_output(character: chars.FormalCharacter) -> Output:
    rows = []
    for depth, mult in character.sorted_terms():
        rows.append((weights.weight_to_json(character.weight_of(depth)), mult,
                     _weight_text(character.weight_of(depth))))
    data = dict(character.to_json(), text=character.text(),
                weights=[{"weight": w, "mult": m} for w, m, _ in rows])
    lines = [character.text()] + [f"{m}\t{t}" for _, m, t in rows]
    return Output(data, "\n".join(lines))


# --- commands ----------------------------------------------------------------------------

def cmd_validate(args) -> Output:
    sgcm = _load_matrix(args)
    report = cartan.validate_sgcm(sgcm)
    sym = cartan.symmetrizer(sgcm)
    flipped = _even_flip(sgcm)
    flipped_sym = cartan.symmetrizer(flipped) if flipped is not None else None
    data = {
        "is_sgcm": report.is_sgcm,
        "is_anisotropic": report.is_anisotropic,
        "violations": [list(v) for v in report.violations],
        "symmetrizer": [str(x) for x in sym] if sym else None,
        "flipped_symmetrizer": [str(x) for x in flipped_sym] if flipped_sym else None,
    }
    text = "\n".join(f"{k}={json.dumps(v)}" for k, v in data.items())
    return Output(data, text)


def _even_flip(sgcm: cartan.Sgcm) -> cartan.Sgcm | None:
    """Zero diagonal entries replaced by 2 with the parity flipped to even."""
    zeros = [i for p, i in enumerate(sgcm.indices) if sgcm.entries[p][p] == 0]
    if not zeros:
        return None
    entries = [list(r) for r in sgcm.entries]
    for i in zeros:
        entries[sgcm.pos(i)][sgcm.pos(i)] = 2
    parity = {i: cartan.EVEN if i in zeros else sgcm.parity[i] for i in sgcm.indices}
    return cartan.Sgcm(sgcm.indices, parity, entries)


def cmd_diagram(args) -> Output:
    head = cartan.preset(args.preset)
    diagram = cartan.build_merged_diagram(head, _rank(args.rank, args.flavor), args.flavor)
    if args.truncate is not None:
        diagram = cartan.truncate_diagram(diagram, args.flavor, _rank(args.truncate, args.flavor))
    return Output(diagram.to_json(), diagram.text())


def cmd_reflect(args) -> Output:
    if args.diagram:
        diagram = cartan.DynkinDiagram.from_json(_read_json(args.diagram))
        fs = reflect.FundamentalSystem.from_diagram(diagram, reflect.basis_weights_for(diagram))
    else:
        fs = reflect.head_system(cartan.preset(args.preset), Fraction(args.rank, 2), "dg")
    kind, _, value = args.sequence.partition(":")
    if kind == "bc":
        seq = reflect.bc_sequence(int(value), args.tail)
    elif kind == "bs":
        seq = reflect.bs_sequence(int(value), args.tail)
    else:
        seq = [{str(k): int(v) for k, v in expr.items()} for expr in _read_json(args.sequence)]
    result = reflect.apply_sequence(fs, seq, reflected_sign=args.sign)
    described = result.describe()
    data = {"diagram": result.to_diagram().to_json(), "roots": described}
    text = result.to_diagram().text() + "\n" + "\n".join(
        f"{r['id']} [{r['parity']}] = {r['root']}" for r in described)
    return Output(data, text)


_WEIGHT_MAPS: dict[str, Callable] = {
    "natural": weights.natural_map,
    "theta": weights.theta_map,
    "natural-inverse": weights.natural_inverse,
    "theta-inverse": weights.theta_inverse_weight,
}


def cmd_weights(args) -> Output:
    weight = _load_weight(args.weight)
    if args.map == "truncate":
        if args.flavor is None or args.n is None:
            raise DomainError("truncate needs --flavor and --n")
        result = weights.truncate_weight(weight, args.flavor, _rank(args.n, args.flavor))
        if result is None:
            return Output(None, "0")
    else:
        result = _WEIGHT_MAPS[args.map](weight)
    return Output(weights.weight_to_json(result), _weight_text(result))


def cmd_symfunc(args) -> Output:
    mu = symfunc.partition(_parse_ints(args.partition))
    if args.kind == "lr":
        nu = symfunc.partition(_parse_ints(args.other))
        table = symfunc.lr_coefficients(mu, nu)
        rows = sorted(table.items(), key=lambda kv: (len(kv[0]), kv[0]), reverse=True)
        return Output([{"partition": list(k), "coeff": v} for k, v in rows],
                      "\n".join(f"{v}\t{','.join(map(str, k))}" for k, v in rows))
    poly = symfunc.schur(mu, args.m) if args.kind == "schur" else symfunc.hook_schur(mu, args.m, args.n)
    names = [f"x{i + 1}" for i in range(args.m)] + [f"y{j + 1}" for j in range(args.n if args.kind == "hook" else 0)]
    monomials = poly.monomials()
    return Output([{"exponent": list(e), "coeff": c} for e, c in monomials], poly.text(names))


def _parse_word(group: coxkl.WeylGroup, text: str) -> coxkl.CoxeterElement:
    text = text.strip()
    if text in ("", "e"):
        return group.identity
    return group.from_word([int(p) - 1 for p in text.split(".")])


def cmd_kl(args) -> Output:
    group = coxkl.WeylGroup(_load_matrix(args))
    levi = [p - 1 for p in _parse_ints(args.levi)]
    if args.pairs:
        pairs = []
        for item in args.pairs.split(";"):
            x, _, w = item.partition("/")
            pairs.append((_parse_word(group, x), _parse_word(group, w)))
    else:
        elements = [y for y in group.enumerate_up_to_length(args.cutoff)
                    if not (group.left_descents(y) & frozenset(levi))]
        pairs = [(x, w) for w in elements for x in elements if group.bruhat_le(x, w)]
    rows = []
    for x, w in pairs:
        poly = coxkl.parabolic_kl(group, levi, x, w, args.convention) if levi else group.kl_polynomial(x, w)
        rows.append((repr(x), repr(w), poly.text()))
    return Output([{"x": x, "w": w, "poly": p} for x, w, p in rows],
                  "\n".join(f"{x}\t{w}\t{p}" for x, w, p in rows))


def cmd_char(args) -> Output:
    head = cartan.preset(args.preset)
    rank = _rank(args.rank, args.flavor)
    weight = _load_weight(args.weight, head, args.flavor)
    levi = _parse_names(args.levi)
    if args.model == "verma":
        character = chars.parabolic_verma_char(head, args.flavor, rank, weight, args.cutoff, levi)
    else:
        character = chars.irreducible_char(head, args.flavor, rank, weight, args.cutoff)
    return _character_output(character)


def cmd_transfer(args) -> Output:
    head = cartan.preset(args.preset)
    weight = _load_weight(args.weight, head, "g")
    levi = _parse_names(args.levi) if args.levi is not None else list(head.even_heads())
    if args.single:
        table = chars.TransferTable.single(weight)
    else:
        even_rank = args.even_rank if args.even_rank is not None else max(args.cutoff, 1)
        length = args.length if args.length is not None else 2 * args.cutoff + 2
        table = chars.even_side_table(head, even_rank, weight, length, levi)
    rank = _rank(args.rank, args.target)
    character = chars.superduality_transfer(table, head, rank, args.cutoff, args.target, levi)
    return _character_output(character)


def cmd_truncate(args) -> Output:
    head = cartan.preset(args.preset)
    weight = _load_weight(args.weight, head, args.flavor)
    levi = _parse_names(args.levi)
    full = chars.parabolic_verma_char(head, args.flavor, _rank(args.rank, args.flavor), weight,
                                      args.cutoff, levi)
    return _character_output(chars.truncate_char(full, args.flavor, _rank(args.n, args.flavor)))


def cmd_tensor(args) -> Output:
    head = cartan.preset(args.preset)
    first = _load_weight(args.first, head, args.flavor)
    second = _load_weight(args.second, head, args.flavor)
    result = chars.tensor_decompose_integrable(head, args.flavor, _rank(args.rank, args.flavor),
                                               first, second, args.cutoff)
    rows = sorted(((_weight_text(w), weights.weight_to_json(w), m) for w, m in result.items()),
                  key=lambda r: r[0])
    return Output([{"weight": j, "mult": m} for _, j, m in rows],
                  "\n".join(f"{m}\t{t}" for t, _, m in rows))


def cmd_roots(args) -> Output:
    sgcm = _load_matrix(args)
    roots = oracle.root_multiplicities(sgcm, args.height, require_symmetrizable=False)
    rows = sorted(roots.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    data = [{"root": list(b), "mult": m, "parity": "odd" if p else "even"} for b, (m, p) in rows]
    header = "\t".join(sgcm.indices)
    lines = [f"# {header}\tmult\tparity"]
    lines += ["\t".join(map(str, b)) + f"\t{m}\t{'odd' if p else 'even'}" for b, (m, p) in rows]
    return Output(data, "\n".join(lines))


def cmd_oracle(args) -> Output:
    if args.kind == "roots":
        return cmd_roots(args)
    if args.kind == "shapovalov":
        sgcm = _load_matrix(args)
        labels = [Fraction(x) for x in _parse_ints(args.labels)] or [0] * sgcm.size
        table = oracle.shapovalov_multiplicities(sgcm, labels, args.depth)
        rows = sorted(table.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        data = [{"depth": list(b), "verma": v, "irreducible": i} for b, (v, i) in rows]
        return Output(data, "\n".join("\t".join(map(str, b)) + f"\t{v}\t{i}" for b, (v, i) in rows))
    model = oracle.MatrixSuperalgebraModel(args.m, args.n)
    builders = {"trivial": oracle.trivial_module, "natural": oracle.natural_module,
                "adjoint": oracle.adjoint_module}
    module = builders[args.module](model)
    composition = _parse_ints(args.composition)
    if sum(composition) != args.m + args.n:
        raise DomainError("composition must sum to the matrix size")
    if args.degree is not None:
        degrees = [args.degree]
    else:
        lower, _ = oracle.nilradicals(model, composition)
        degrees = list(range(len(lower) + 1))
    data, lines = [], []
    for k in degrees:
        for hw, mult in oracle.kostant_homology(model, composition, module, k):
            data.append({"degree": k, "weight": list(hw), "mult": mult})
            lines.append(f"{k}\t{','.join(map(str, hw))}\t{mult}")
    return Output(data, "\n".join(lines))


# --- parser ------------------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    parent = _Parser(add_help=False)
    parent.add_argument("--out", help="write output to this path instead of stdout")
    parent.add_argument("--format", choices=("json", "text"), default="text")
    return parent


def _matrix_inputs(p):
    p.add_argument("--matrix", help="SGCM or diagram JSON file")
    p.add_argument("--diagram", help="diagram JSON file")
    p.add_argument("--preset", help="named matrix or head preset")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="superduality", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    rank_help = "tail rank; dg ranks are passed doubled (2r)"

    p = sub.add_parser("validate", parents=[common], help="check the SGCM conditions")
    _matrix_inputs(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("diagram", parents=[common], help="head diagram merged with tails")
    p.add_argument("--preset", required=True)
    p.add_argument("--flavor", choices=cartan.FLAVORS, required=True)
    p.add_argument("--rank", type=int, required=True, help=rank_help)
    p.add_argument("--truncate", type=int, help="truncate to this rank (doubled for dg)")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("reflect", parents=[common], help="apply odd reflections")
    p.add_argument("--diagram", help="diagram JSON file")
    p.add_argument("--preset", help="head preset; the dg system is used")
    p.add_argument("--rank", type=int, default=4, help="doubled dg rank for --preset")
    p.add_argument("--sequence", required=True, help="bc:N, bs:N, or a JSON list of root expressions")
    p.add_argument("--tail", type=int, default=0)
    p.add_argument("--sign", type=int, choices=(-1, 1), default=-1,
                   help="sign of the reflected root in the new system")
    p.set_defaults(func=cmd_reflect)

    p = sub.add_parser("weights", parents=[common], help="weight bijections and truncation")
    p.add_argument("--weight", required=True, help="weight JSON file or 'trivial'")
    p.add_argument("--map", choices=sorted(_WEIGHT_MAPS) + ["truncate"], required=True)
    p.add_argument("--flavor", choices=cartan.FLAVORS)
    p.add_argument("--n", type=int, help="truncation rank (doubled for dg)")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("symfunc", parents=[common], help="Schur, hook Schur and LR coefficients")
    p.add_argument("kind", choices=("schur", "hook", "lr"))
    p.add_argument("--partition", required=True, help="comma separated parts")
    p.add_argument("--other", help="second partition for lr")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--n", type=int, default=0)
    p.set_defaults(func=cmd_symfunc)

    p = sub.add_parser("kl", parents=[common], help="Kazhdan-Lusztig polynomials")
    _matrix_inputs(p)
    p.add_argument("--pairs", help="x/w pairs separated by ';', words like 1.2.1 or e")
    p.add_argument("--cutoff", type=int, default=3, help="length bound when --pairs is omitted")
    p.add_argument("--levi", help="comma separated 1-based generator positions")
    p.add_argument("--convention", choices=("u=-1", "u=q"), default="u=-1")
    p.set_defaults(func=cmd_kl)

    weight_help = "weight JSON file, 'trivial', or 'partition:2,1' for gl(m|1) heads"
    p = sub.add_parser("char", parents=[common], help="parabolic Verma or irreducible characters")
    p.add_argument("--preset", required=True)
    p.add_argument("--flavor", choices=cartan.FLAVORS, required=True)
    p.add_argument("--rank", type=int, required=True, help=rank_help)
    p.add_argument("--weight", default="trivial", help=weight_help)
    p.add_argument("--model", choices=("verma", "irr"), default="verma")
    p.add_argument("--cutoff", type=int, required=True)
    p.add_argument("--levi", help="comma separated head vertices in the Levi")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("transfer", parents=[common], help="character transfer from the even side")
    p.add_argument("--preset", required=True)
    p.add_argument("--weight", default="trivial", help=weight_help)
    p.add_argument("--cutoff", type=int, required=True)
    p.add_argument("--target", choices=("sg", "dg"), default="sg")
    p.add_argument("--rank", type=int, default=0, help="target " + rank_help)
    p.add_argument("--even-rank", type=int, help="even side rank (default: the cutoff)")
    p.add_argument("--length", type=int, help="Weyl length bound of the even table")
    p.add_argument("--levi", help="head vertices in the Levi (default: all even head vertices)")
    p.add_argument("--single", action="store_true", help="use the column {lambda: 1}")
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("truncate", parents=[common], help="truncated parabolic Verma character")
    p.add_argument("--preset", required=True)
    p.add_argument("--flavor", choices=cartan.FLAVORS, required=True)
    p.add_argument("--rank", type=int, required=True, help=rank_help)
    p.add_argument("--n", type=int, required=True, help="target " + rank_help)
    p.add_argument("--weight", default="trivial", help=weight_help)
    p.add_argument("--cutoff", type=int, required=True)
    p.add_argument("--levi", help="comma separated head vertices in the Levi")
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("tensor", parents=[common], help="integrable tensor product decomposition")
    p.add_argument("--preset", required=True)
    p.add_argument("--flavor", choices=cartan.FLAVORS, required=True)
    p.add_argument("--rank", type=int, required=True, help=rank_help)
    p.add_argument("--first", required=True, help=weight_help)
    p.add_argument("--second", required=True, help=weight_help)
    p.add_argument("--cutoff", type=int, required=True)
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("roots", parents=[common], help="root multiplicities up to a height")
    _matrix_inputs(p)
    p.add_argument("--height", type=int, required=True)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("oracle", parents=[common], help="brute-force oracles")
    p.add_argument("kind", choices=("roots", "shapovalov", "homology"))
    _matrix_inputs(p)
    p.add_argument("--height", type=int, default=4)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--labels", help="comma separated highest weight labels")
    p.add_argument("--m", type=int, default=3, help="gl(m|n) for homology")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--composition", default="2,1", help="block sizes of the Levi")
    p.add_argument("--module", choices=("trivial", "natural", "adjoint"), default="trivial")
    p.add_argument("--degree", type=int)
    p.set_defaults(func=cmd_oracle)
    return parser


def _emit(output: Output, args) -> None:
    if args.format == "json":
        body = json.dumps(output.data, indent=2, sort_keys=True)
    else:
        body = output.text
    body = body if body.endswith("\n") else body + "\n"
    if args.out:
        Path(args.out).write_text(body)
    else:
        sys.stdout.write(body)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError(parser.format_usage() + "superduality: error: a command is required")
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    try:
        _emit(args.func(args), args)
    except ResourceGuardError as exc:
        sys.stderr.write(f"resource guard: {exc}\n")
        return EXIT_GUARD
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    return EXIT_OK


def main() -> None:
    sys.exit(run())
