"""Command-line interface: ``restricted-range <command> --instance ...``.

Exit codes: 0 success, 1 verification failure, 2 malformed input, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import endo as E
from . import exgreens as X
from . import ideals as I
from . import oracle as O
from . import witness as W
from .errors import MalformedInputError, PreconditionError, SizeLimitError
from .greens import eggbox
from .instances import load_instance
from .semigroup import DEFAULT_CAP, classify_instance, enumerate_semigroup
from .verify import CLOSED, RELATIONS, SCHEMA, run_conformance

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED, EXIT_CAP = 0, 1, 2, 3

WITNESS_OPS = [
    "regularize",
    "deregularize",
    "divide-right",
    "divide-left",
    "factorize-through",
    "iso-transfer",
    "rank-drop",
    "composite-search",
]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(args, source=None):
    return enumerate_semigroup(load_instance(source or args.instance[0]), cap=args.cap)


# -- commands ----------------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    t = _table(args)
    if args.format == "text":
        lines = [f"{t.instance!r}: {len(t)} elements, |Q| = {int(t.q_mask.sum())}, {t.classification.instance_class}"]
        for i, a in enumerate(t.elements):
            flags = ("Q" if t.q_mask[i] else "-") + ("E" if t.idem_mask[i] else "-")
            lines.append(f"{i:5d} {flags} {E.label(a)}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _dump(t.to_json()))
    return EXIT_OK


def _relation_text(t, part, fmt) -> str:
    labels = [E.label(a) for a in t.elements]
    if fmt == "json":
        return _dump(
            {
                "schema": SCHEMA,
                "instance": t.instance.to_json(),
                "relation": part.name,
                "classes": [list(b) for b in part.blocks],
                "members": [[labels[x] for x in b] for b in part.blocks],
            }
        )
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "map", "class"])
        lab = part.labels()
        for i, text in enumerate(labels):
            w.writerow([i, text, lab[i]])
        return buf.getvalue()
    if fmt == "dot":
        lines = [f'graph "{part.name}" {{', "  node [shape=box];"]
        for k, b in enumerate(part.blocks):
            text = "\\n".join(labels[x] for x in b)
            lines.append(f'  c{k} [label="{text}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    out = [f"{part.name}: {len(part)} classes"]
    out += ["  {" + ", ".join(labels[x] for x in b) + "}" for b in part.blocks]
    return "\n".join(out) + "\n"


def cmd_relations(args) -> int:
    t = _table(args)
    part = CLOSED[args.rel](t)
    if args.oracle:
        part = O.ORACLES[args.rel](t)
    _emit(args, _relation_text(t, part, args.format))
    return EXIT_OK


def cmd_eggbox(args) -> int:
    t = _table(args)
    box = eggbox(t)
    if args.format == "dot":
        _emit(args, box.to_dot())
    elif args.format == "text":
        lines = []
        for k, d in enumerate(box.dclasses):
            r, c = d.shape
            lines.append(f"D{k}: {r}x{c} {'regular' if d.regular else 'non-regular'}")
            for row in d.cells:
                lines.append("  | " + " | ".join(" ".join(E.label(t.elements[x]) for x in cell) or "." for cell in row) + " |")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _dump(box.to_json()))
    return EXIT_OK


def cmd_ideals(args) -> int:
    t = _table(args)
    out = {"schema": SCHEMA, "instance": t.instance.to_json()}
    status = EXIT_OK
    ideals = None
    if args.enumerate or args.check_theorem or args.format == "dot":
        ideals = O.oracle_ideals(t, args.max_principal)
        out["ideals"] = [list(i) for i in ideals]
        out["hasse_edges"] = [list(e) for e in I.hasse_edges(ideals)]
        out["chain"] = I.is_chain(ideals)
    if args.check_theorem:
        checks = [I.theorem_form_check(t, i) for i in ideals]
        out["theorem_forms"] = [c.to_json() for c in checks]
        out["Q_ideals"] = [d.describe() for d in I.Q_ideal_chain(t)]
        if not all(c.passed for c in checks):
            status = EXIT_FAIL
    if args.incomparable:
        pair = I.incomparable_pair(t)
        out["incomparable"] = pair.to_json() if pair else {"not_applicable": pair.reason}
    if args.format == "dot":
        _emit(args, I.lattice_dot(ideals))
    else:
        _emit(args, _dump(out))
    return status


def _parse_arg(t, text):
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"argument {text!r} is not JSON") from exc
    if isinstance(value, int):
        if not 0 <= value < len(t):
            raise MalformedInputError(f"element index {value} out of range")
        return value
    if isinstance(value, dict):
        return t.index_of(E.endo_from_json(t.instance, value))
    if isinstance(value, list):
        key = "img" if t.instance.kind == "set" else "rows"
        return t.index_of(E.endo_from_json(t.instance, {key: value}))
    raise MalformedInputError(f"cannot read an element from {text!r}")


def cmd_witness(args) -> int:
    t = _table(args)
    raw = list(args.args or [])
    op = args.op
    if op == "rank-drop":
        if len(raw) != 2:
            raise MalformedInputError("rank-drop takes an element and an integer s")
        idx, s = [_parse_arg(t, raw[0])], int(raw[1])
    else:
        idx = [_parse_arg(t, x) for x in raw]
    need = 1 if op in ("regularize", "deregularize", "rank-drop") else 2
    if len(idx) != need:
        raise MalformedInputError(f"{op} takes {need} element argument(s)")
    els = [t.elements[i] for i in idx]
    out = {"schema": SCHEMA, "op": op, "args": [E.label(a) for a in els]}
    try:
        if op == "regularize":
            r = W.regularize(t, idx[0])
            ok = E.is_regular_Q(r) and E.image(r) == E.image(els[0])
            out["result"] = r.to_json()
        elif op == "deregularize":
            r = W.deregularize(t, idx[0])
            ok = not E.is_regular_Q(r) and E.image(r) == E.image(els[0])
            out["result"] = r.to_json()
        elif op == "divide-right":
            mu = W.divide_right(t, *idx)
            ok = E.compose(els[1], mu) == els[0]
            out["result"] = mu.to_json()
        elif op == "divide-left":
            lam = W.divide_left(t, *idx)
            ok = E.compose(lam, els[1]) == els[0]
            out["result"] = lam.to_json()
        elif op == "factorize-through":
            lam, mu = W.factorize_through(t, *idx)
            x = E.compose(lam, els[1])
            x = x if mu is None else E.compose(x, mu)
            ok = x == els[0]
            out["result"] = {"lambda": lam.to_json(), "mu": None if mu is None else mu.to_json()}
        elif op == "iso-transfer":
            g, mu = W.iso_transfer(t, *idx)
            a, b = els
            ok = (E.kernel(g), E.image(g), E.kernel(mu), E.image(mu)) == (
                E.kernel(a),
                E.image(b),
                E.kernel(b),
                E.image(a),
            )
            out["result"] = {"gamma": g.to_json(), "mu": mu.to_json()}
        elif op == "rank-drop":
            lam = W.rank_drop_multiplier(t, idx[0], s)
            la = E.compose(lam, els[0])
            ok = not E.is_regular_Q(la) and E.rank_on_B(la).value == s
            out["result"] = lam.to_json()
        else:
            found = W.composite_witness_search(t, *idx, order=args.order, all_witnesses=True)
            predicted = (X.composite_LstarRstar if args.order == "LR" else X.composite_RstarLstar)(t, *idx)
            ok = bool(found) == predicted
            out["result"] = t.elements[found[0]].to_json() if found else None
            out["all_witnesses"] = [E.label(t.elements[g]) for g in found]
    except PreconditionError as exc:
        out["error"] = str(exc)
        _emit(args, _dump(out))
        return EXIT_MALFORMED
    out["postcondition"] = bool(ok)
    _emit(args, _dump(out))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_classify(args) -> int:
    inst = load_instance(args.instance[0])
    out = {"schema": SCHEMA, "instance": inst.to_json(), **classify_instance(inst).to_json()}
    if args.abundance:
        t = enumerate_semigroup(inst, cap=args.cap)
        if t.classification.standing_assumptions:
            out["abundance"] = X.abundance(t).to_json()
            predicted, observed = X.rtilde_left_congruence(t)
            out["Rtilde_left_congruence"] = {"predicted": predicted, "observed": observed}
        else:
            out["abundance"] = None
            out["notice"] = "regular instance: abundance report needs a non-regular T(A,B)"
    _emit(args, _dump(out))
    return EXIT_OK


def _verify_one(source, cap, relations, ideals, skip_oracle, seed, max_principal):
    t = enumerate_semigroup(load_instance(source), cap=cap)
    rep = run_conformance(
        t, relations=relations, ideals=ideals, skip_oracle=skip_oracle, max_principal=max_principal, seed=seed
    )
    return rep.to_json()


def cmd_verify(args) -> int:
    relations = None if args.relations in (None, "all") else args.relations.split(",")
    for r in relations or []:
        if r not in CLOSED:
            raise MalformedInputError(f"unknown relation {r!r}")
    jobs = [(s, args.cap, relations, args.ideals, args.skip_oracle, args.seed, args.max_principal) for s in args.instance]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_one, *zip(*jobs)))
    else:
        reports = [_verify_one(*j) for j in jobs]
    passed = all(r["passed"] for r in reports)
    if args.format == "text":
        lines = []
        for r in reports:
            s = r["summary"]
            head = f"{'PASS' if r['passed'] else 'FAIL'} {json.dumps(r['instance'])}: {s.get('elements')} elements"
            if "ideals" in s:
                head += f" / {s['ideals']} ideals"
            if "Dstar_classes" in s:
                head += f" / {s['Dstar_classes']} D*-classes"
            lines.append(head)
            lines += [f"  notice: {n}" for n in r["notices"]]
            lines += [f"  FAIL {c['name']}: {json.dumps(c.get('counterexample'))}" for c in r["checks"] if not c["passed"]]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _dump(reports[0] if len(reports) == 1 else {"schema": SCHEMA, "passed": passed, "reports": reports}))
    return EXIT_OK if passed else EXIT_FAIL


# -- parser -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--instance", action="append", required=True, help="instance JSON file or bundled name")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum |T(A,B)|")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="restricted-range", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", parents=[common], help="list T(A,B)")
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("relations", parents=[common], help="one relation as a partition")
    s.add_argument("--rel", choices=RELATIONS, required=True)
    s.add_argument("--format", choices=["json", "dot", "csv", "text"], default="json")
    s.add_argument("--oracle", action="store_true", help="brute force instead of the closed form")
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("eggbox", parents=[common], help="eggbox diagram of the D-classes")
    s.add_argument("--format", choices=["json", "dot", "text"], default="json")
    s.set_defaults(func=cmd_eggbox)

    s = sub.add_parser("ideals", parents=[common], help="ideal lattice and its forms")
    s.add_argument("--enumerate", action="store_true")
    s.add_argument("--check-theorem", action="store_true")
    s.add_argument("--incomparable", action="store_true")
    s.add_argument("--max-principal", type=int, default=16)
    s.add_argument("--format", choices=["json", "dot"], default="json")
    s.set_defaults(func=cmd_ideals)

    s = sub.add_parser("witness", parents=[common], help="run one constructive operation")
    s.add_argument("--op", choices=WITNESS_OPS, required=True)
    s.add_argument("--args", nargs="+", help="elements as index, image list / row matrix, or endo JSON")
    s.add_argument("--order", choices=["LR", "RL"], default="LR", help="composite-search: L*oR* or R*oL*")
    s.set_defaults(func=cmd_witness, format="json")

    s = sub.add_parser("classify", parents=[common], help="monoid / regular classification")
    s.add_argument("--abundance", action="store_true")
    s.set_defaults(func=cmd_classify, format="json")

    s = sub.add_parser("verify", parents=[common], help="full conformance suite")
    s.add_argument("--relations", default="all", help="'all' or a comma list")
    s.add_argument("--ideals", action=argparse.BooleanOptionalAction, default=True)
    s.add_argument("--skip-oracle", action="store_true")
    s.add_argument("--max-principal", type=int, default=16)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (MalformedInputError, PreconditionError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
