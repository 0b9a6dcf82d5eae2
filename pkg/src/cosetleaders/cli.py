"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 parse error, 3 enumeration cap exceeded,
4 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .code import ORACLE_CAP, LinearCode, bundled_codes, load_code
from .exceptions import CosetLeadersError, ParseError, TooLarge
from .errors import classify_errors, is_trial_set, trial_set_from_leaders
from .field import Word, weight
from .ideal import build_ideal
from .leaders import decode_gradient, is_test_set, leader_codewords
from .order import TIE_BREAKS, OrderSpec
from .verify import run_checks

EXIT_USAGE, EXIT_PARSE, EXIT_CAP, EXIT_VERIFY = 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    code: str
    order: OrderSpec
    cap: int
    format: str
    audit: bool
    seed: int
    pretty: bool
    word: str | None = None


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--code", required=True, metavar="FILE",
                        help=f"code file, or a bundled name: {', '.join(bundled_codes())}")
    common.add_argument("--order", choices=TIE_BREAKS, default="lex")
    common.add_argument("--cap", type=_positive, default=ORACLE_CAP,
                        help="largest word space / coset count to enumerate")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--audit", action="store_true", help="keep provenance of leader codewords")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--pretty", action="store_true",
                        help="print field elements as coefficient polynomials in b")

    parser = _Parser(prog="cosetleaders", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("info", parents=[common], help="code parameters n, k, q, d, t, rho")
    sub.add_parser("coset-leaders", parents=[common], help="all coset leaders per syndrome")
    sub.add_parser("leaders", parents=[common], help="leader codewords L(C)")
    sub.add_parser("errors", parents=[common], help="correctable/uncorrectable errors, trial set")
    dec = sub.add_parser("decode", parents=[common], help="gradient-like decoding with L(C)")
    dec.add_argument("--word", required=True, help="received word, comma-separated packed elements")
    sub.add_parser("verify", parents=[common], help="run every property check")
    return parser


def parse_config(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command, code=ns.code, order=OrderSpec(ns.order), cap=ns.cap,
        format=ns.format, audit=ns.audit, seed=ns.seed, pretty=ns.pretty,
        word=getattr(ns, "word", None),
    )


# rendering


class Renderer:
    def __init__(self, code: LinearCode, pretty: bool):
        self.field = code.field
        self.pretty = pretty

    def word(self, w: Word):
        if self.pretty:
            return [self.field.format_element(a) for a in w]
        return list(w)

    def flat(self, w: Word) -> str:
        return " ".join(str(a) for a in self.word(w))


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _load(config: RunConfig) -> LinearCode:
    try:
        return load_code(config.code, cap=config.cap, table_cap=config.cap)
    except FileNotFoundError as exc:
        raise ParseError(str(exc)) from exc


def _code_params(code: LinearCode) -> dict:
    return {"name": code.name, "p": code.field.p, "m": code.field.m, "q": code.q,
            "n": code.n, "k": code.k}


def cmd_info(config: RunConfig) -> str:
    code = _load(config)
    reg = build_ideal(code, config.order)
    data = {
        "n": code.n, "k": code.k, "q": code.q, "p": code.field.p, "m": code.field.m,
        "f": list(code.field.f), "d": code.min_distance, "t": code.t,
        "rho": reg.table.covering_radius, "codewords": code.q ** code.k,
    }
    if config.format == "json":
        return json.dumps(data)
    if config.format == "csv":
        return _csv([["key", "value"], *([k, v if not isinstance(v, list) else " ".join(map(str, v))]
                                          for k, v in data.items())])
    return "\n".join(f"{k:>9}: {v}" for k, v in data.items()) + "\n"


def cmd_coset_leaders(config: RunConfig) -> str:
    code = _load(config)
    reg = build_ideal(code, config.order)
    r = Renderer(code, config.pretty)
    records = list(reg.table)
    if config.format == "json":
        return json.dumps([
            {"syndrome": list(rec.syndrome), "weight": rec.weight,
             "leaders": [r.word(v) for v in rec.leaders], "canonical": r.word(rec.canonical)}
            for rec in records
        ])
    if config.format == "csv":
        return _csv([["syndrome", "weight", "canonical", "leaders"]] + [
            [" ".join(map(str, rec.syndrome)), rec.weight, r.flat(rec.canonical),
             "; ".join(r.flat(v) for v in rec.leaders)]
            for rec in records
        ])
    lines = [f"{len(records)} cosets, |CL(C)| = {len(reg.leaders)}, |O(C)| = {len(reg.members)}"]
    for rec in records:
        lines.append(f"s={' '.join(map(str, rec.syndrome))}  w={rec.weight}  "
                     + " | ".join(r.flat(v) for v in rec.leaders))
    return "\n".join(lines) + "\n"


def cmd_leaders(config: RunConfig) -> str:
    code = _load(config)
    reg = build_ideal(code, config.order)
    L = leader_codewords(reg, audit=config.audit)
    r = Renderer(code, config.pretty)
    rho = reg.table.covering_radius
    words = L.sorted(code.field, config.order)
    test = is_test_set(code, L.words, reg.table) is True
    data = {
        "code_params": _code_params(code), "rho": rho,
        "leader_codewords": [r.word(w) for w in words],
        "max_weight": L.max_weight, "bound_2rho_plus_1": 2 * rho + 1, "is_test_set": test,
    }
    if config.audit:
        data["provenance"] = [
            {"codeword": r.word(w),
             "triples": [{"v1": r.word(v1), "e": [i, j], "v2": r.word(v2)} for v1, (i, j), v2 in L.provenance[w]]}
            for w in words
        ]
    if config.format == "json":
        return json.dumps(data)
    if config.format == "csv":
        return _csv([["codeword", "weight"]] + [[r.flat(w), weight(w)] for w in words])
    lines = [f"|L(C)| = {len(words)}, max weight {L.max_weight} <= 2*rho+1 = {2 * rho + 1}, "
             f"test set: {test}"]
    lines += [r.flat(w) for w in words]
    return "\n".join(lines) + "\n"


def cmd_errors(config: RunConfig) -> str:
    code = _load(config)
    reg = build_ideal(code, config.order)
    cl = classify_errors(code, config.order, reg.table)
    L = leader_codewords(reg)
    T = trial_set_from_leaders(reg, cl, L.words)
    rep = is_trial_set(code, T, config.order, cl)
    key = config.order.word_key(code.field)
    r = Renderer(code, config.pretty)
    M1 = sorted(cl.M1, key=key)
    Ts = sorted(T, key=key)
    data = {
        "E0_size": len(cl.E0), "E1_size": len(cl.E1), "M1": [r.word(y) for y in M1],
        "M0_size": len(cl.M0), "trial_set": [r.word(c) for c in Ts], "checks": rep.as_dict(),
    }
    if config.format == "json":
        return json.dumps(data)
    if config.format == "csv":
        return _csv([["set", "word"]] + [["M1", r.flat(y)] for y in M1] + [["T", r.flat(c)] for c in Ts])
    lines = [f"|E0| = {len(cl.E0)}, |E1| = {len(cl.E1)}, |M1| = {len(M1)}, |M0| = {len(cl.M0)}",
             f"trial set ({len(Ts)} of {len(L)} leader codewords): checks {rep.as_dict()}"]
    lines += [r.flat(c) for c in Ts]
    return "\n".join(lines) + "\n"


def _parse_word(text: str, code: LinearCode) -> Word:
    try:
        w = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise ParseError(f"--word must be comma-separated integers, got {text!r}") from None
    if len(w) != code.n:
        raise ParseError(f"--word has {len(w)} entries, code length is {code.n}")
    for col, a in enumerate(w, 1):
        if not 0 <= a < code.q:
            raise ParseError(f"--word entry {col} is {a}, outside [0, {code.q - 1}]")
    return w


def cmd_decode(config: RunConfig) -> str:
    code = _load(config)
    y = _parse_word(config.word, code)
    reg = build_ideal(code, config.order)
    L = leader_codewords(reg)
    res = decode_gradient(code.field, y, L.words, config.order, reg.table)
    r = Renderer(code, config.pretty)
    data = {"error": r.word(res.error), "codeword": r.word(res.codeword), "steps": res.steps}
    if config.format == "json":
        return json.dumps(data)
    if config.format == "csv":
        return _csv([["error", "codeword", "steps"], [r.flat(res.error), r.flat(res.codeword), res.steps]])
    return f"error    {r.flat(res.error)}\ncodeword {r.flat(res.codeword)}\nsteps    {res.steps}\n"


def cmd_verify(config: RunConfig) -> tuple[str, bool]:
    code = _load(config)
    try:
        report = run_checks(code, config.order, config.seed)
    except TooLarge as exc:
        hint = ""
        if code.q ** (code.n - code.k) <= config.cap:
            hint = "; `coset-leaders` and `leaders` only need the coset table and still fit"
        raise TooLarge(f"exhaustive verification ({exc.what}){hint}", exc.size, exc.cap) from exc
    if config.format == "json":
        return json.dumps(report.as_dict()), report.passed
    if config.format == "csv":
        rows = [["check", "passed", "detail"]]
        rows += [[c.name, "pass" if c.passed else "FAIL", c.detail] for c in report.checks]
        rows += [[f"note: {k}", "", v] for k, v in report.notes]
        return _csv(rows), report.passed
    width = max(len(c.name) for c in report.checks)
    lines = [f"{code.name} [{code.n},{code.k}] over GF({code.q}), order {config.order.tie_break}"]
    for c in report.checks:
        lines.append(f"  {'PASS' if c.passed else 'FAIL'}  {c.name:<{width}}  {c.detail}")
    for k, v in report.notes:
        lines.append(f"  note  {k}: {v}")
    lines.append("all checks passed" if report.passed else "some checks FAILED")
    return "\n".join(lines) + "\n", report.passed


COMMANDS = {
    "info": cmd_info,
    "coset-leaders": cmd_coset_leaders,
    "leaders": cmd_leaders,
    "errors": cmd_errors,
    "decode": cmd_decode,
}


def run(config: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        if config.command == "verify":
            text, ok = cmd_verify(config)
            status = 0 if ok else EXIT_VERIFY
        else:
            text = COMMANDS[config.command](config)
            status = 0
    except CosetLeadersError as exc:
        print(f"cosetleaders: {type(exc).__name__}: {exc}", file=err)
        return exc.exit_code
    out.write(text if text.endswith("\n") else text + "\n")
    return status


def main(argv=None) -> int:
    return run(parse_config(argv))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
