"""Command-line front end.

Exit codes: 0 success, 1 domain error (caps exceeded, failed search), 2 usage
or input error.  Errors go to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from coxref.core.conditionf import condition_F_scan
from coxref.core.group import BALL_CAP, CoxeterGroup
from coxref.core.matrix import resolve_matrix
from coxref.core.words import CLOSURE_CAP
from coxref.errors import CoxrefError, InputError
from coxref.recognizer import certify_coxeter, close_group, format_cycles, load_generators

_FORMATS = ("text", "json")


class DomainFailure(CoxrefError):
    code = "check_failed"


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--cap-elements", type=int, default=argparse.SUPPRESS, metavar="N",
                   help=f"cap on enumerated group elements (default {BALL_CAP})")
    p.add_argument("--cap-closure", type=int, default=argparse.SUPPRESS, metavar="N",
                   help=f"cap on braid-closure size (default {CLOSURE_CAP})")
    p.add_argument("--format", choices=_FORMATS, default=argparse.SUPPRESS)
    p.add_argument("--out", default=argparse.SUPPRESS, metavar="PATH", help="write the report here")
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="coxref", parents=[common],
                                     description="Exact Coxeter-group and reflection-space computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("nf", "ShortLex normal form and length of a word"),
                        ("length", "length of a word")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("matrix", help="matrix file or built-in name (A3, B3, H3, I2(5), tri236, ...)")
        p.add_argument("word", nargs="?", default="", help='e.g. "s0 s1 s0" or "s t s"')

    p = sub.add_parser("ball", parents=[common], help="elements of length <= radius")
    p.add_argument("matrix")
    p.add_argument("radius", type=int)

    p = sub.add_parser("order", parents=[common], help="group order (up to the element cap)")
    p.add_argument("matrix")

    p = sub.add_parser("check-f", parents=[common], help="scan condition (F) over a finite Coxeter group")
    p.add_argument("matrix")

    p = sub.add_parser("descend", parents=[common], help="fold a point into the base chamber")
    p.add_argument("model", help="line, 244, 333, 236 or cayley:<matrix>")
    p.add_argument("point", help="line: p/q; plane: 'a + b r3 , c + d r3'; cayley: 'vertex <word>'")

    p = sub.add_parser("tile", parents=[common], help="chamber tiling of a Euclidean triangle group")
    p.add_argument("type", choices=("244", "333", "236"))
    p.add_argument("radius", type=int)
    p.add_argument("--svg", metavar="PATH", help="write an SVG drawing")
    p.add_argument("--json", metavar="PATH", help="write exact coordinates as JSON")

    p = sub.add_parser("verify", parents=[common], help="run a verification report on a model")
    p.add_argument("model")
    p.add_argument("--lemma", required=True, choices=("1", "2", "4", "5", "6", "proper", "stabilizer"))
    p.add_argument("--radius", type=int, default=6)

    p = sub.add_parser("recognize", parents=[common], help="decide whether permutations form a Coxeter system")
    p.add_argument("perms", help="file with one generator per line in cycle notation")
    return parser


# -- commands ----------------------------------------------------------------

def _group(args):
    m = resolve_matrix(args.matrix)
    return m, CoxeterGroup(m, closure_cap=args.cap_closure, ball_cap=args.cap_elements)


def cmd_nf(args):
    m, group = _group(args)
    word = m.parse_word(args.word)
    g = group.normal_form(word)
    result = {"input": m.format_word(word), "normal_form": m.format_word(g.word),
              "letters": list(g.word), "length": len(g)}
    text = f"normal form: {m.format_word(g.word) or '1'}\nlength: {len(g)}"
    return result, text


def cmd_length(args):
    m, group = _group(args)
    word = m.parse_word(args.word)
    n = group.length(word)
    return {"input": m.format_word(word), "length": n}, str(n)


def cmd_ball(args):
    m, group = _group(args)
    elements = group.ball(args.radius)
    sizes = [0] * (args.radius + 1)
    for g in elements:
        sizes[len(g)] += 1
    cumulative = [sum(sizes[:k + 1]) for k in range(len(sizes))]
    result = {"radius": args.radius, "elements": [m.format_word(g.word) for g in elements],
              "counts": sizes, "cumulative": cumulative, "total": len(elements)}
    lines = [m.format_word(g.word) or "1" for g in elements]
    lines.append("counts: " + " ".join(map(str, sizes)))
    lines.append("cumulative: " + " ".join(map(str, cumulative)))
    lines.append(f"total: {len(elements)}")
    return result, "\n".join(lines)


def cmd_order(args):
    m, group = _group(args)
    n = group.order(args.cap_elements)
    return {"order": n}, str(n)


def cmd_check_f(args):
    m, group = _group(args)
    elements = group.ball(group.longest_length())
    scan = condition_F_scan(m, elements)
    names = m.generator_names()
    cx = scan.counterexample
    result = {"order": len(elements), "checked": scan.checked, "passed": scan.passed,
              "counterexample": None if cx is None else cx.to_json(names)}
    if scan.passed:
        text = f"PASS: (F) holds on all {scan.checked} triples (order {len(elements)})"
    else:
        text = f"FAIL: gamma={m.format_word(cx.gamma)} s={names[cx.s]} t={names[cx.t]}"
    return result, text


def cmd_descend(args):
    from coxref.spaces import descend, gallery_distance, make_model

    model = make_model(args.model)
    p = model.parse_point(args.point)
    d = descend(model, p)
    dist = gallery_distance(model, p) if d.membership.value == "interior" else None
    if dist is not None and dist != d.step_count:
        raise DomainFailure(f"descent used {d.step_count} steps but {dist} walls separate the point")
    word = model.format_word(d.gamma)
    result = {"model": model.name, "point": model.point_json(p), "word": word,
              "steps": [model.generator_names[s] for s in d.steps], "image": model.point_json(d.point),
              "membership": d.membership.value, "step_count": d.step_count, "gallery_distance": dist}
    text = "\n".join([f"word: {word or '1'}", f"image: {model.format_point(d.point)}",
                      f"steps: {d.step_count}", f"gallery distance: {'n/a (on a wall)' if dist is None else dist}"])
    return result, text


def cmd_tile(args):
    from coxref.spaces import TriangleModel, tile
    from coxref.spaces.tiling import dumps_json, tiling_json, tiling_svg

    model = TriangleModel(args.type)
    model.group.ball_cap = args.cap_elements
    tiles = tile(model, args.radius)
    if args.svg:
        Path(args.svg).write_text(tiling_svg(model, args.radius, tiles))
    data = tiling_json(model, args.radius, tiles)
    if args.json:
        Path(args.json).write_text(dumps_json(data))
    result = {"type": args.type, "radius": args.radius, "polygons": len(tiles),
              "svg": args.svg, "json": args.json}
    return result, f"{len(tiles)} chambers"


def cmd_verify(args):
    from coxref.spaces import make_model, run_check

    model = make_model(args.model)
    report = run_check(model, args.lemma, args.radius)
    data = report.to_json()
    text = [f"{report.check} on {report.model} (radius {report.radius}): "
            f"{report.checks} checks, {len(report.violations)} violations"]
    text += ["witness: " + json.dumps(w, sort_keys=True) for w in report.witnesses]
    text += ["violation: " + json.dumps(v, sort_keys=True) for v in report.violations]
    if not report.ok:
        return data, "\n".join(text), 1
    return data, "\n".join(text)


def cmd_recognize(args):
    gens = load_generators(args.perms)
    group = close_group(gens, cap=args.cap_elements)
    verdict = certify_coxeter(group, cap=args.cap_elements)
    data = verdict.to_json()
    data["generators"] = [format_cycles(g) for g in gens]
    lines = [f"verdict: {verdict.status}", f"group order: {verdict.group_order}"]
    if verdict.matrix is not None:
        lines.append("matrix:")
        lines += ["  " + " ".join("inf" if x == float("inf") else str(x) for x in row)
                  for row in verdict.matrix.entries]
    cx = verdict.counterexample
    if cx is not None:
        gamma = " ".join(f"s{i}" for i in cx.gamma) or "1"
        lines.append(f"counterexample: gamma={gamma} s=s{cx.s} t=s{cx.t}")
    if verdict.reason:
        lines.append(f"reason: {verdict.reason}")
    return data, "\n".join(lines)


COMMANDS = {
    "nf": cmd_nf, "length": cmd_length, "ball": cmd_ball, "order": cmd_order,
    "check-f": cmd_check_f, "descend": cmd_descend, "tile": cmd_tile,
    "verify": cmd_verify, "recognize": cmd_recognize,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    args.cap_elements = getattr(args, "cap_elements", BALL_CAP)
    args.cap_closure = getattr(args, "cap_closure", CLOSURE_CAP)
    fmt = getattr(args, "format", "text")
    out = getattr(args, "out", None)
    try:
        produced = COMMANDS[args.command](args)
    except InputError as exc:
        print(json.dumps(exc.to_dict(), sort_keys=True), file=sys.stderr)
        return 2
    except CoxrefError as exc:
        print(json.dumps(exc.to_dict(), sort_keys=True), file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(json.dumps({"error": "usage_error", "message": str(exc)}, sort_keys=True), file=sys.stderr)
        return 2
    data, text, *rest = produced
    code = rest[0] if rest else 0
    if fmt == "json":
        body = json.dumps({"command": args.command, "ok": code == 0, "result": data},
                          indent=2, sort_keys=True) + "\n"
    else:
        body = text + "\n"
    if out:
        Path(out).write_text(body)
    else:
        sys.stdout.write(body)
    return code


if __name__ == "__main__":
    sys.exit(main())
