"""Command-line entry point.

Every decision command prints one JSON document (or a one-line summary with
``--format text``).  Exit status is 0 whenever a verdict was reached, 2 for
usage and parse errors and 3 when an internal tripwire fires.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import automata as fa
from . import oracle
from .autorel import from_sync_fsl, relation_decide
from .definability import (allsync_regular, ambiguity_witness, decide_definability,
                           is_prefix_recognizable, maxsync_regular, minsync_regular)
from .errors import Diverged, ParseError, SyncrelError
from .formats import format_automaton, format_transducer, load_model, parse_tagged_word
from .resync import to_canonical_fs, to_canonical_fsl
from .syncword import TaggedAlphabet, classify, finite_shiftlag, word_metrics
from .uniform import (distance_of_word, eval_subseq, has_finite_shift_subseq_uniformization,
                      has_recognizable_uniformization, synthesize_recognizable_uniformizer,
                      uniformizer_to_subseq)
from .verdict import Verdict

EXIT_OK, EXIT_USAGE, EXIT_DEFECT = 0, 2, 3


class UsageError(Exception):
    pass


def _show_word(w):
    return " ".join(str(l) for l in w) if w else "ε"


def _load(path, kind=None, expect=None):
    model = load_model(path, kind)
    if expect and model.kind not in expect:
        raise UsageError(f"{path}: expected a {' or '.join(expect)} file, got {model.kind}")
    return model


def _load_pair(s_path, t_path):
    S, T = _load(s_path, expect=("automaton",)), _load(t_path, expect=("automaton",))
    if S.alphabet != T.alphabet:
        raise UsageError("source and target declare different alphabets")
    return S, T


def _verdict_report(v: Verdict, witness_path=None, alphabet=None):
    report = v.as_dict()
    report["witness"] = None
    if v.witness is not None and witness_path:
        Path(witness_path).write_text(format_automaton(v.witness, alphabet), encoding="utf-8")
        report["witness"] = str(witness_path)
    elif v.witness is not None:
        report["witness"] = format_automaton(v.witness, alphabet)
    return report


# ---------------------------------------------------------------------------
# commands


def classify_file(path):
    model = _load(path, expect=("automaton",))
    report = classify(model.value).as_dict()
    report["file"] = str(path)
    return report


def cmd_classify(args):
    if args.jobs > 1 and len(args.files) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(classify_file, args.files))
    else:
        reports = [classify_file(p) for p in args.files]
    return reports[0] if len(reports) == 1 else reports


def cmd_def(args):
    S, T = _load_pair(args.source, args.target)
    v = decide_definability(S.value, T.value)
    return _verdict_report(v, args.witness, T.alphabet)


def cmd_select(args):
    S, T = _load_pair(args.source, args.target)
    proc = {"allsync": allsync_regular, "minsync": minsync_regular,
            "maxsync": maxsync_regular}[args.which]
    v = proc(S.value, T.value)
    return _verdict_report(v, args.witness, T.alphabet)


def cmd_verify_def(args):
    S, T = _load_pair(args.source, args.target)
    W = _load(args.witness_file, expect=("automaton",))
    inside = fa.subset(W.value, T.value)
    same = None
    if finite_shiftlag(W.value) and finite_shiftlag(S.value):
        same = relation_decide("equivalent", from_sync_fsl(W.value, S.alphabet),
                               from_sync_fsl(S.value, S.alphabet))
    ok = inside and bool(same)
    return {"answer": "yes" if ok else "no", "method": "witness-check",
            "witness": str(args.witness_file),
            "reason": f"inclusion in target: {inside}; same relation as source: {same}"}


def cmd_unamb(args):
    T = _load(args.target, expect=("automaton",))
    pair = ambiguity_witness(T.value)
    if pair is None:
        return {"answer": "yes", "method": "divergence-pairs", "witness": None,
                "reason": "no two distinct words synchronize the same pair"}
    return {"answer": "no", "method": "divergence-pairs",
            "witness": [_show_word(pair[0]), _show_word(pair[1])],
            "reason": "two distinct words synchronize the same pair"}


def cmd_prefix_rec(args):
    R = _load(args.relation, kind="relation")
    v = is_prefix_recognizable(R.value)
    return _verdict_report(v, args.witness, R.alphabet)


def cmd_unif(args):
    if args.mode == "subseq":
        return {"answer": "unsupported", "method": "none", "witness": None,
                "reason": "subsequential uniformization of automatic relations and its "
                          "finite-shiftlag variants are not implemented"}
    S = _load(args.source, expect=("automaton",))
    if args.mode == "rec":
        v = has_recognizable_uniformization(S.value)
    else:
        v = has_finite_shift_subseq_uniformization(S.value)
    report = v.as_dict()
    report["witness"] = None
    if v.yes and args.synthesize:
        f = uniformizer_to_subseq(synthesize_recognizable_uniformizer(S.value))
        Path(args.synthesize).write_text(format_transducer(f), encoding="utf-8")
        report["witness"] = str(args.synthesize)
    return report


def cmd_canon(args):
    S = _load(args.source, expect=("automaton",))
    C = to_canonical_fsl(S.value, S.alphabet) if args.form == "fsl" else \
        to_canonical_fs(S.value, S.alphabet)
    text = format_automaton(C, S.alphabet)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    return {"form": args.form, "states": C.n, "output": args.output or text}


def cmd_eval(args):
    f = _load(args.transducer, expect=("transducer",)).value
    if not hasattr(f, "delta"):
        raise UsageError("evaluation needs a subsequential transducer")
    u = tuple(args.word.split()) if " " in args.word.strip() else tuple(args.word.strip())
    out = eval_subseq(f, u)
    return {"input": "".join(u), "output": None if out is None else "".join(out)}


def _bound(n):
    if n > oracle.MAX_ORACLE_LEN:
        raise UsageError(f"--max-len is limited to {oracle.MAX_ORACLE_LEN}")
    return n


def cmd_oracle(args):
    if args.what == "metrics":
        alphabet = TaggedAlphabet(tuple(args.inputs.split()), tuple(args.outputs.split()))
        w = parse_tagged_word(args.args[0], alphabet)
        fast = word_metrics(w)
        brute = oracle.metrics(w)
        return {"lag": brute[0], "shift": brute[1], "shiftlag": brute[2],
                "agrees": fast == brute}
    if args.what == "pairs":
        n = _bound(args.max_len)
        S = _load(args.args[0], expect=("automaton",))
        pairs = sorted(oracle.pairs(S.value, n), key=lambda p: (len(p[0]) + len(p[1]), p))
        return {"maxLen": n, "count": len(pairs),
                "pairs": [["".join(u) if all(len(s) == 1 for s in u) else " ".join(u),
                           "".join(v) if all(len(s) == 1 for s in v) else " ".join(v)]
                          for u, v in pairs]}
    if args.what == "maximal":
        T = _load(args.args[0], expect=("automaton",))
        w = parse_tagged_word(args.args[1], T.alphabet)
        _bound(len(w))
        if not fa.member(T.value, w):
            raise UsageError("the word is not in the target language")
        return {"word": _show_word(w), "maximal": oracle.is_maximal(T.value, w)}
    if args.what == "distance":
        B = _load(args.args[0], kind="distance-automaton").value
        w = tuple(args.args[1].split())
        _bound(len(w))
        d = distance_of_word(B, w)
        brute = oracle.min_distance(B, w)
        return {"word": " ".join(w), "distance": None if d == float("inf") else d,
                "agrees": d == brute}
    raise UsageError(f"unknown oracle query {args.what!r}")


# ---------------------------------------------------------------------------
# argument parsing and output


def _text_line(report):
    if isinstance(report, list):
        return "\n".join(_text_line(r) for r in report)
    if "answer" in report:
        line = f"{report['answer']} ({report.get('method')}): {report.get('reason', '')}"
        if report.get("checks"):
            line += " [" + "; ".join(report["checks"]) + "]"
        return line
    if "class" in report:
        prefix = f"{report['file']}: " if "file" in report else ""
        return (f"{prefix}{report['class']} (lag {report['lag']}, shift {report['shift']}, "
                f"shiftlag {report['shiftlag']}, gamma {report['gamma']})")
    if "lag" in report:
        return f"{report['lag']} {report['shift']} {report['shiftlag']}"
    return " ".join(f"{k}={v}" for k, v in report.items() if not isinstance(v, (list, dict)))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    p = argparse.ArgumentParser(prog="syncrel", parents=[common],
                                description="Synchronization languages and relations.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="lag/shift/shiftlag class")
    c.add_argument("files", nargs="+")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_classify)

    d = sub.add_parser("def", parents=[common], help="is ⟦S⟧ definable inside T")
    d.add_argument("source")
    d.add_argument("target")
    d.add_argument("--witness")
    d.set_defaults(func=cmd_def)

    s = sub.add_parser("select", parents=[common], help="regularity of allsync/minsync/maxsync")
    s.add_argument("which", choices=("allsync", "minsync", "maxsync"))
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("--witness")
    s.set_defaults(func=cmd_select)

    v = sub.add_parser("verify-def", parents=[common], help="re-check a definability witness")
    v.add_argument("source")
    v.add_argument("target")
    v.add_argument("witness_file")
    v.set_defaults(func=cmd_verify_def)

    u = sub.add_parser("unamb", parents=[common], help="unambiguity of a target language")
    u.add_argument("target")
    u.set_defaults(func=cmd_unamb)

    r = sub.add_parser("prefix-rec", parents=[common], help="prefix-recognizability")
    r.add_argument("relation")
    r.add_argument("--witness")
    r.set_defaults(func=cmd_prefix_rec)

    f = sub.add_parser("unif", parents=[common], help="uniformization questions")
    f.add_argument("mode", choices=("rec", "fs", "subseq"))
    f.add_argument("source")
    f.add_argument("--synthesize", help="write a uniformizing transducer here")
    f.set_defaults(func=cmd_unif)

    k = sub.add_parser("canon", parents=[common], help="canonical representative")
    k.add_argument("form", choices=("fsl", "fs"))
    k.add_argument("source")
    k.add_argument("-o", "--output")
    k.set_defaults(func=cmd_canon)

    e = sub.add_parser("eval", parents=[common], help="run a subsequential transducer")
    e.add_argument("transducer")
    e.add_argument("word")
    e.set_defaults(func=cmd_eval)

    o = sub.add_parser("oracle", parents=[common], help="brute-force reference answers")
    o.add_argument("what", choices=("pairs", "metrics", "maximal", "distance"))
    o.add_argument("args", nargs="+")
    o.add_argument("--max-len", type=int, default=6)
    o.add_argument("--inputs", default="a", help="input symbols for untagged words")
    o.add_argument("--outputs", default="b", help="output symbols for untagged words")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        report = args.func(args)
    except Diverged as exc:
        print(f"internal tripwire: {exc}", file=sys.stderr)
        return EXIT_DEFECT
    except (UsageError, ParseError, SyncrelError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "text":
        print(_text_line(report))
    else:
        print(json.dumps(report, ensure_ascii=False, indent=2))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
