"""Command-line front end.

Every command prints one JSON line (``--pretty`` for a table). Exit status
is 0 on success, 1 when a verification fails and 2 on usage errors,
including malformed input documents.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from . import bitrades as bt
from .blocks import BlockSpec
from .bounds import minsupp
from .core import from_document, parse_rational, to_document
from .families import FAMILIES, FamilySpec, construct, expected_support, random_spec
from .oracle import BudgetExceeded, SearchBudget, min_support_search
from .reduce import is_uniform, restrict
from .selftest import run_selftest
from .spectra import SpectrumInterval, decompose, is_member

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


@dataclass
class CommandReport:
    command: str
    parameters: dict
    result: Any
    elapsed: float = 0.0
    status: int = EXIT_OK

    def envelope(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "result": self.result,
            "elapsed_s": round(self.elapsed, 6),
            "status": self.status,
        }

    def render(self, pretty: bool = False, envelope: bool = False) -> str:
        payload = self.envelope() if envelope else self.result
        if not pretty:
            return json.dumps(payload, separators=(",", ":"))
        return _table(payload)


def _table(payload: Any) -> str:
    if isinstance(payload, dict):
        width = max((len(str(k)) for k in payload), default=0)
        return "\n".join(f"{str(k).ljust(width)}  {_cell(v)}" for k, v in payload.items())
    if isinstance(payload, list):
        return "\n".join(_cell(v) for v in payload)
    return _cell(payload)


def _cell(v: Any) -> str:
    return v if isinstance(v, str) else json.dumps(v, separators=(",", ":"))


class UsageError(Exception):
    pass


def _read_json(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON: {exc}") from None


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]


def _sigma(text: str) -> list[int]:
    return _ints(text) if ("," in text or " " in text) else [int(ch) for ch in text]


# command handlers return (result, status)

def cmd_block(a) -> tuple[Any, int]:
    kind = {"a": "A", "b": "B", "phi1": "Phi1", "c": "C", "d": "D", "e": "E"}[a.kind]
    q = 3 if kind in ("B", "Phi1") and a.q is None else a.q
    if q is None:
        raise UsageError(f"block {a.kind} needs --q")
    if kind in ("A", "C"):
        if a.k is None or a.m is None:
            raise UsageError(f"block {a.kind} needs --k and --m")
        params: tuple = (a.k, a.m)
    elif kind == "D":
        if a.k is None:
            raise UsageError("block d needs --k")
        params = (a.k,)
    elif kind == "B" and (a.pi or a.sigma):
        pi = _ints(a.pi) if a.pi else [1, 2, 3]
        sigmas = [_sigma(s) for s in a.sigma] if a.sigma else [[0, 1, 2]] * 3
        params = (tuple(pi), *map(tuple, sigmas))
    else:
        params = ()
    return to_document(BlockSpec(kind, q, params).build()), EXIT_OK


def cmd_family(a) -> tuple[Any, int]:
    c = parse_rational(a.c)
    if a.action == "expected":
        return {"family": a.family, "value": expected_support(a.family, a.n, a.i, a.j)}, EXIT_OK
    if a.seed is not None:
        spec = random_spec(a.family, a.n, a.i, a.j, a.seed, c)
    else:
        spec = FamilySpec(a.family, a.n, a.i, a.j, c)
    return to_document(construct(spec)), EXIT_OK


def cmd_member(a) -> tuple[Any, int]:
    f = from_document(_read_json(a.file))
    ok = is_member(f, SpectrumInterval(f.n, f.q, a.i, a.j))
    return {"member": ok, "n": f.n, "q": f.q, "i": a.i, "j": a.j}, EXIT_OK if ok else EXIT_FAILED


def cmd_decompose(a) -> tuple[Any, int]:
    f = from_document(_read_json(a.file))
    return {"components": [to_document(p) for p in decompose(f)]}, EXIT_OK


def cmd_restrict(a) -> tuple[Any, int]:
    f = from_document(_read_json(a.file))
    return to_document(restrict(f, a.r, a.k)), EXIT_OK


def cmd_uniform(a) -> tuple[Any, int]:
    f = from_document(_read_json(a.file))
    u = is_uniform(f)
    return {"uniform": u.uniform, "witnesses": list(u.witnesses)}, EXIT_OK


def cmd_bound(a) -> tuple[Any, int]:
    return minsupp(a.n, a.q, a.i, a.j).as_dict(), EXIT_OK


def cmd_search(a) -> tuple[Any, int]:
    iv = SpectrumInterval(a.n, a.q, a.i, a.j)
    budget = SearchBudget(a.max_support, **{k: v for k, v in
                                           (("max_vertices", a.max_vertices), ("max_subsets", a.max_subsets))
                                           if v is not None})
    res = min_support_search(iv, budget, symmetry=a.symmetry, jobs=a.jobs)
    bound = minsupp(a.n, a.q, a.i, a.j)
    return {
        "size": res.size,
        "witness": to_document(res.witness) if res.witness is not None else None,
        "subsets_examined": res.subsets_examined,
        "completed": res.completed,
        "stopped": res.stopped,
        "bound": bound.value,
    }, EXIT_OK


def _verdict(v: bt.BitradeVerdict) -> dict:
    out = {"valid": v.valid, "size": v.size}
    if not v.valid:
        out["counterexample"] = "".join(map(str, v.counterexample))
        out["ball_counts"] = list(v.ball_counts)
    out.update(independent=v.independent, balanced=v.balanced, perfect_matching=v.perfect_matching)
    return out


def cmd_bitrade(a) -> tuple[Any, int]:
    if a.action == "construct":
        return bt.to_document(bt.minimal_bitrade_q3(a.m)), EXIT_OK
    if a.action == "exists":
        e = bt.exists_bitrade(a.n, a.q)
        return {"exists": "not established" if e is None else e, "n": a.n, "q": a.q}, EXIT_OK
    b = bt.from_document(_read_json(a.file))
    if a.action == "verify":
        v = bt.verify_bitrade(b)
        return _verdict(v), EXIT_OK if v.valid else EXIT_FAILED
    v = bt.verify_bitrade(b)
    if not v.valid:
        return _verdict(v), EXIT_FAILED
    return to_document(bt.to_eigenfunction(b)), EXIT_OK


def cmd_selftest(a) -> tuple[Any, int]:
    rows = run_selftest()
    ok = all(r.passed for r in rows)
    result = {r.tag: ("pass" if r.passed else "FAIL") + f"  {r.detail}" for r in rows}
    return result, EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable table output")
    common.add_argument("--report", action="store_true", help="wrap output with command, parameters, timing")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for searches")

    p = argparse.ArgumentParser(prog="hamming-eigen", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("block", parents=[common], help="emit a building-block function")
    s.add_argument("kind", choices=["a", "b", "phi1", "c", "d", "e"])
    s.add_argument("--q", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--pi", help="pi(1),pi(2),pi(3) for block b, e.g. 2,1,3")
    s.add_argument("--sigma", action="append", help="symbol permutation per coordinate, e.g. 102 (repeat 3x)")
    s.set_defaults(handler=cmd_block)

    fam = sub.add_parser("family", help="F1..F4 product constructions")
    fsub = fam.add_subparsers(dest="action", required=True)
    for action in ("construct", "expected"):
        s = fsub.add_parser(action, parents=[common])
        s.add_argument("--family", choices=FAMILIES, required=True)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--i", type=int, required=True)
        s.add_argument("--j", type=int, required=True)
        s.add_argument("--c", default="1", help="nonzero rational scale, e.g. -3/2")
        s.add_argument("--seed", type=int, help="draw block parameters reproducibly")
        s.set_defaults(handler=cmd_family)

    for name, handler, extra in (
        ("member", cmd_member, ("i", "j")),
        ("decompose", cmd_decompose, ()),
        ("restrict", cmd_restrict, ("r", "k")),
        ("uniform", cmd_uniform, ()),
    ):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("file", help="function document, or - for stdin")
        for arg in extra:
            s.add_argument(f"--{arg}", type=int, required=True)
        s.set_defaults(handler=handler)

    s = sub.add_parser("bound", parents=[common], help="closed-form minimum support")
    for arg in ("n", "q", "i", "j"):
        s.add_argument(f"--{arg}", type=int, required=True)
    s.set_defaults(handler=cmd_bound)

    s = sub.add_parser("search", parents=[common], help="exhaustive minimum-support search")
    for arg in ("n", "q", "i", "j"):
        s.add_argument(f"--{arg}", type=int, required=True)
    s.add_argument("--max-support", type=int, default=6)
    s.add_argument("--max-vertices", type=int)
    s.add_argument("--max-subsets", type=int)
    s.add_argument("--symmetry", action="store_true", help="fix vertex 0 in the support")
    s.set_defaults(handler=cmd_search)

    br = sub.add_parser("bitrade", help="1-perfect bitrades")
    bsub = br.add_subparsers(dest="action", required=True)
    s = bsub.add_parser("construct", parents=[common])
    s.add_argument("--m", type=int, required=True)
    s = bsub.add_parser("exists", parents=[common])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    for action in ("verify", "function"):
        s = bsub.add_parser(action, parents=[common])
        s.add_argument("file", help="bitrade document, or - for stdin")
    for s in bsub.choices.values():
        s.set_defaults(handler=cmd_bitrade)

    s = sub.add_parser("selftest", parents=[common], help="run the invariant battery")
    s.set_defaults(handler=cmd_selftest)
    return p


def run(argv: Optional[Sequence[str]] = None) -> CommandReport:
    args = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(args).items() if k not in ("handler", "pretty", "report")}
    start = time.perf_counter()
    try:
        result, status = args.handler(args)
    except (UsageError, BudgetExceeded, ValueError) as exc:
        result, status = {"error": str(exc)}, EXIT_USAGE
    return CommandReport(args.command, params, result, time.perf_counter() - start, status)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    report = run(argv)
    stream = sys.stdout if report.status != EXIT_USAGE else sys.stderr
    print(report.render(pretty=args.pretty, envelope=args.report), file=stream)
    return report.status


if __name__ == "__main__":
    sys.exit(main())
