"""Command-line front end.

Every command prints JSON objects, one per line, with sorted keys (or CSV for
point sets with ``--format csv``).  Exit status: 0 success, 1 a verifier
reported a failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable

from .cartan import build_cartan, project_weight, validate_automorphism
from .catalog import catalog_pairs, lookup_pair
from .crystal import CrystalEngine
from .errors import ConfigurationError, CrystalFoldError
from .folding import (
    FoldedPairContext,
    similarity_datum,
    verify_composite,
    verify_doubling,
    verify_similarity_param,
    verify_slice,
)
from .polytope import string_polytope_points, verify_folding_theorem
from .weyl import longest_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


# ---------------------------------------------------------------------------
# parameter parsing


def _ints(text) -> tuple[int, ...]:
    if isinstance(text, (list, tuple)):
        return tuple(int(x) for x in text)
    text = str(text).strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.replace(" ", ",").split(",") if tok)
    except ValueError:
        raise ConfigurationError(f"expected comma-separated integers, got {text!r}") from None


def _names(text) -> tuple[str, ...]:
    if isinstance(text, (list, tuple)):
        return tuple(str(x) for x in text)
    return tuple(tok.strip() for tok in str(text).split(",") if tok.strip())


def _need(params: dict, *keys: str) -> None:
    missing = [k for k in keys if params.get(k) is None]
    if missing:
        raise ConfigurationError(f"missing parameter(s): {', '.join(missing)}")


def _fold(params: dict):
    _need(params, "type")
    return validate_automorphism(build_cartan(params["type"]), params.get("omega"))


def _word_or_longest(cartan, params: dict):
    return _ints(params["word"]) if params.get("word") is not None else longest_word(cartan).letters


# ---------------------------------------------------------------------------
# commands: each returns (records, ok)


def cmd_cartan(p: dict):
    _need(p, "type")
    c = build_cartan(p["type"])
    rec: dict[str, Any] = {"type": c.type_tag, "labels": list(c.labels),
                           "matrix": [list(r) for r in c.matrix]}
    if p.get("omega"):
        fold = validate_automorphism(c, p["omega"])
        rec["omega"] = fold.cycles()
    return [rec], True


def cmd_fold_info(p: dict):
    fold = _fold(p)
    rec: dict[str, Any] = {
        "type": fold.source.type_tag, "omega": fold.cycles(),
        "orbits": [list(o) for o in fold.orbits], "reps": list(fold.reps),
        "m": list(fold.orbit_sizes),
        "orbit_cartan": {"type": fold.orbit_cartan.type_tag,
                         "matrix": [list(r) for r in fold.orbit_cartan.matrix]},
        "fixed_cartan": {"type": fold.fixed_cartan.type_tag,
                         "matrix": [list(r) for r in fold.fixed_cartan.matrix]},
    }
    if p.get("lambda") is not None:
        lam = _ints(p["lambda"])
        rec["lambda_hat"] = list(project_weight(fold, lam, "hat"))
        rec["lambda_breve"] = list(project_weight(fold, lam, "breve"))
    if p.get("word") is not None:
        from .weyl import theta_word
        rec["theta_word"] = list(theta_word(fold, _ints(p["word"])).letters)
    return [rec], True


def _engine(p: dict) -> CrystalEngine:
    _need(p, "type")
    iota = _ints(p["iota"]) if p.get("iota") else None
    return CrystalEngine(build_cartan(p["type"]), iota)


def cmd_crystal_enum(p: dict):
    eng = _engine(p)
    word = _word_or_longest(eng.cartan, p)
    if p.get("lambda") is not None:
        elements = eng.enumerate_demazure(_ints(p["lambda"]), word)
    else:
        _need(p, "depth")
        elements = eng.enumerate_infty(word, int(p["depth"]))
    return [dict(b.to_json(), weight=list(b.weight)) for b in elements], True


def cmd_param(p: dict):
    eng = _engine(p)
    _need(p, "lambda")
    word = _word_or_longest(eng.cartan, p)
    kind = p.get("kind") or "string"
    if kind not in ("string", "nz"):
        raise ConfigurationError(f"unknown kind {kind!r}")
    lam = tuple(int(p.get("k") or 1) * x for x in _ints(p["lambda"]))
    param = eng.string_param if kind == "string" else eng.kashiwara_param
    pairs = [{"element": list(b.coords), "vector": list(param(b.lift, word))}
             for b in eng.enumerate_demazure(lam, word)]
    pairs.sort(key=lambda r: (r["vector"], r["element"]))
    return [{"type": eng.cartan.type_tag, "kind": kind, "word": list(word),
             "lambda": list(lam), "pairs": pairs}], True


def cmd_polytope(p: dict):
    eng = _engine(p)
    _need(p, "lambda")
    word = _word_or_longest(eng.cartan, p)
    pts = string_polytope_points(eng, p.get("kind") or "string", _ints(p["lambda"]), word,
                                 int(p.get("k") or 1))
    if p.get("format") == "csv":
        return pts.to_csv(), True
    return [pts.to_json()], True


def cmd_verify_folding(p: dict):
    _need(p, "lambda", "word")
    kinds = _names(p.get("kinds") or "string,nz")
    k_max = int(p.get("k_max") or 2)
    lam, word = _ints(p["lambda"]), _ints(p["word"])
    if p.get("pair"):
        pair = lookup_pair(p["pair"])
        lam_r = _ints(p["lambda_right"]) if p.get("lambda_right") else None
        reports = verify_folding_theorem(pair, lam, word, kinds, k_max, lam_right=lam_r)
        reports.append(verify_composite(pair, word))
    else:
        reports = verify_folding_theorem(_fold(p), lam, word, kinds, k_max)
    return [r.to_json() for r in reports], all(r.passed for r in reports)


def cmd_verify_slice(p: dict):
    _need(p, "lambda", "word")
    if p.get("pair"):
        pair = lookup_pair(p["pair"])
        fold = pair.right if p.get("side") == "right" else pair.left
    else:
        fold = _fold(p)
    ctx = FoldedPairContext(fold, _ints(p["word"]))
    reports = verify_slice(ctx, _ints(p["lambda"]))
    return [r.to_json() for r in reports], all(r.passed for r in reports)


def cmd_verify_similarity(p: dict):
    _need(p, "source", "target", "word")
    depth = int(p.get("depth") or 5)
    datum = similarity_datum(p["source"], p["target"])
    reports = verify_similarity_param(datum, _ints(p["word"]), depth)
    if p.get("doubling"):
        src = datum.source.type_tag
        reports.append(verify_doubling(int(src[1:]), _ints(p["word"]), depth, src[0]))
    return [r.to_json() for r in reports], all(r.passed for r in reports)


def cmd_catalog(p: dict):
    return [entry.to_json() for entry in catalog_pairs(include_affine=True)], True


COMMANDS: dict[str, Callable[[dict], tuple]] = {
    "cartan": cmd_cartan,
    "fold-info": cmd_fold_info,
    "crystal-enum": cmd_crystal_enum,
    "param": cmd_param,
    "polytope": cmd_polytope,
    "verify-folding": cmd_verify_folding,
    "verify-slice": cmd_verify_slice,
    "verify-similarity": cmd_verify_similarity,
    "catalog": cmd_catalog,
}

ALLOWED = {
    "cartan": {"type", "omega"},
    "fold-info": {"type", "omega", "lambda", "word"},
    "crystal-enum": {"type", "lambda", "word", "depth", "iota"},
    "param": {"type", "lambda", "word", "kind", "k", "iota"},
    "polytope": {"type", "lambda", "word", "kind", "k", "format", "iota"},
    "verify-folding": {"pair", "type", "omega", "lambda", "lambda_right", "word", "kinds", "k_max"},
    "verify-slice": {"pair", "side", "type", "omega", "lambda", "word"},
    "verify-similarity": {"source", "target", "word", "depth", "doubling"},
    "catalog": set(),
}


# ---------------------------------------------------------------------------
# argv handling


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crystal-fold", description=__doc__.splitlines()[0])
    parser.add_argument("--job", help="JSON job file: one job object or a list of them")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    sub = parser.add_subparsers(dest="command")

    def add(name: str, *flags: tuple[str, dict]) -> None:
        sp = sub.add_parser(name)
        for flag, kw in flags:
            sp.add_argument(flag, **kw)
        sp.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)

    typ = ("--type", {"help": "Cartan type such as A3"})
    omega = ("--omega", {"help": 'cycle notation such as "(1 3)"'})
    lam = ("--lambda", {"dest": "lambda", "help": "weight as 1,1,1"})
    word = ("--word", {"help": "word as 1,2,1"})
    iota = ("--iota", {"help": "period of the coordinate sequence"})
    add("cartan", typ, omega)
    add("fold-info", typ, omega, lam, word)
    add("crystal-enum", typ, lam, word, ("--depth", {"type": int}), iota)
    add("param", typ, lam, word, ("--kind", {"choices": ("string", "nz")}),
        ("--k", {"type": int}), iota)
    add("polytope", typ, lam, word, ("--kind", {"choices": ("string", "nz")}),
        ("--k", {"type": int}), iota)
    add("verify-folding", ("--pair", {}), typ, omega, lam,
        ("--lambda-right", {"dest": "lambda_right"}), word, ("--kinds", {}),
        ("--kmax", {"dest": "k_max", "type": int}))
    add("verify-slice", ("--pair", {}), ("--side", {"choices": ("left", "right")}),
        typ, omega, lam, word)
    add("verify-similarity", ("--source", {}), ("--target", {}), word,
        ("--depth", {"type": int}), ("--doubling", {"action": "store_true", "default": None}))
    add("catalog")
    return parser


def run_job(command: str, params: dict) -> tuple[Any, bool]:
    if command not in COMMANDS:
        raise ConfigurationError(f"unknown command {command!r}")
    unknown = set(params) - ALLOWED[command]
    if unknown:
        raise ConfigurationError(f"unknown parameter(s) for {command}: {', '.join(sorted(unknown))}")
    return COMMANDS[command](params)


def _load_jobs(path: str) -> list[tuple[str, dict]]:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigurationError(f"cannot read job file {path}: {exc}") from None
    jobs = raw if isinstance(raw, list) else [raw]
    out = []
    for job in jobs:
        if not isinstance(job, dict) or "command" not in job:
            raise ConfigurationError("each job needs a 'command' key")
        extra = set(job) - {"command", "parameters"}
        if extra:
            raise ConfigurationError(f"unknown job key(s): {', '.join(sorted(extra))}")
        params = {k.replace("-", "_"): v for k, v in (job.get("parameters") or {}).items()}
        out.append((job["command"], params))
    return out


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("CRYSTAL_FOLD_THREADS", "1")))
    except ValueError:
        raise ConfigurationError("CRYSTAL_FOLD_THREADS must be an integer") from None


def _emit(records, out) -> None:
    if isinstance(records, str):
        out.write(records)
        return
    for rec in records:
        out.write(json.dumps(rec, sort_keys=True) + "\n")


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.job:
            jobs = _load_jobs(args.job)
        elif args.command:
            params = {k: v for k, v in vars(args).items()
                      if k not in ("command", "job") and v is not None}
            if params.get("format") == "json":
                params.pop("format")
            jobs = [(args.command, params)]
        else:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        for command, params in jobs:
            if command in ALLOWED and "format" in params and "format" not in ALLOWED[command]:
                raise ConfigurationError(f"--format csv is not available for {command}")
        with ThreadPoolExecutor(max_workers=_threads()) as pool:
            results = list(pool.map(lambda job: run_job(*job), jobs))
    except CrystalFoldError as exc:
        out.write(json.dumps({"error": type(exc).__name__, "message": str(exc)},
                             sort_keys=True) + "\n")
        return EXIT_USAGE
    ok = True
    for records, passed in results:
        _emit(records, out)
        ok = ok and passed
    return EXIT_OK if ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
