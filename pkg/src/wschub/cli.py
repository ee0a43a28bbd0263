"""``wschub`` command line.

Config file (JSON)::

    {
      "group": "cstar_sp4",            # preset name, or {"simple_roots": [...], "simple_coroots": [...]}
      "lambda": [1, 1, 1],             # dominant weight
      "chi": [8, -1, -1],              # integers, "symbolic" or "nonweighted"
      "parabolic": [1]                 # optional, 1-based simple roots; default: those orthogonal to lambda
    }

``"preset"`` may replace ``"group"`` and ``"lambda"`` with one of
``wps(m)`` (weighted P^m), ``gr(k,n)`` (weighted Grassmannian) or ``lg24``.

Elements are given as reduced words (``s1.s2``), ``e``, ``#k`` (k-th
representative), ``wl:1,-1,1`` (by w.lambda) or preset aliases (``v2``,
``{2,4}``, ``w1``).

Exit codes: 0 ok, 2 invalid config, 3 computation error,
4 negative coefficient or certificate violation.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from .exactpoly import NotDivisible, Poly
from .fixtures import FIXTURES, run_fixture
from .labels import LabelError, label, resolve
from .positivity import (
    DEFAULT_COLUMN_LIMIT,
    NotNonnegative,
    certify_structure_constants,
    negroot_expand_at,
    nonweighted_engine,
)
from .rootdata import RootDatumError
from .schubert import BASES, ChevalleyMismatch, Schubert
from .weighted import ConfigError, SymbolicChiError, WeightedConfig, nonweighted_chi

EXIT_OK, EXIT_CONFIG, EXIT_COMPUTE, EXIT_NEGATIVE = 0, 2, 3, 4


def _preset(name: str):
    s = name.replace(" ", "").lower()
    m = re.fullmatch(r"wps\((\d+)\)", s)
    if m:
        k = int(m.group(1))
        return f"gl({k + 1})", [1] + [0] * k
    m = re.fullmatch(r"gr\((\d+),(\d+)\)", s)
    if m:
        k, n = int(m.group(1)), int(m.group(2))
        if not 0 < k < n:
            raise ConfigError("gr(k,n) needs 0 < k < n")
        return f"cstar_gl({n})", [1] + [1] * k + [0] * (n - k)
    if s in ("lg24", "lg(2,4)"):
        return "cstar_sp4", [1, 1, 1]
    raise ConfigError(f"unknown preset {name!r}")


def load_config(data: dict, limit: int | None = None) -> WeightedConfig:
    """Build and validate a configuration from its JSON form."""
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    if "preset" in data:
        group, lam = _preset(data["preset"])
        lam = data.get("lambda", lam)
    else:
        if "group" not in data or "lambda" not in data:
            raise ConfigError("config needs 'group' and 'lambda' (or 'preset')")
        group, lam = data["group"], data["lambda"]
    chi = data.get("chi", "symbolic")
    par = data.get("parabolic")
    if par is not None:
        par = [int(j) - 1 for j in par]
    kw = {"limit": limit} if limit else {}
    if chi == "nonweighted":
        probe = WeightedConfig(group, lam, "symbolic", par, **kw)
        chi = nonweighted_chi(probe.datum, probe.lam)
    cfg = WeightedConfig(group, lam, chi, par, **kw)
    rep = cfg.validate()
    if not rep.valid:
        raise ConfigError("; ".join(rep.messages))
    return cfg


# --------------------------------------------------------------------------
def _names(cfg):
    return [f"x{i}" for i in range(cfg.rank)]


def _poly(cfg, p: Poly, fmt: str, names=None):
    return p.to_json() if fmt == "json" else p.to_str(names or _names(cfg))


def _expansion(cfg, exp, fmt):
    return [{"class": label(cfg, w), "word": w.word_str(), "coeff": _poly(cfg, exp.coeffs[w], fmt)}
            for w in cfg.reps if w in exp.coeffs]


def _vec(s: str) -> tuple[int, ...]:
    return tuple(int(x) for x in s.replace("(", "").replace(")", "").split(","))


def cmd_describe(cfg, args, fmt):
    out = cfg.describe()
    out["gcd_chi"] = None if cfg.symbolic else cfg.gchi
    out["minuscule"] = cfg.is_minuscule()
    out["validation"] = cfg.validate().messages
    for item, w in zip(out["reps"], cfg.reps):
        item["label"] = label(cfg, w)
        item["inversions"] = [list(b) for b in cfg.cosets.inversion_set(w)]
        item["covers"] = [label(cfg, x) for x, _ in cfg.cosets.covers[w]]
    return out, EXIT_OK


def cmd_restrict(cfg, args, fmt):
    S = Schubert(cfg)
    w, x = resolve(cfg, args.w), resolve(cfg, args.x)
    p = S.weighted_restrict(w, x, args.basis)
    return {"class": label(cfg, w), "at": label(cfg, x), "basis": args.basis,
            "value": _poly(cfg, p, fmt)}, EXIT_OK


def cmd_multiply(cfg, args, fmt):
    S = Schubert(cfg)
    u, v = resolve(cfg, args.u), resolve(cfg, args.v)
    exp = S.structure_constants(u, v, args.basis)
    return {"u": label(cfg, u), "v": label(cfg, v), "basis": args.basis,
            "terms": _expansion(cfg, exp, fmt)}, EXIT_OK


def cmd_chevalley(cfg, args, fmt):
    S = Schubert(cfg)
    v = resolve(cfg, args.v)
    if args.alpha is not None:
        forms = S.chevalley_divisor(args.alpha - 1, v, args.basis, forms=True)
        what = {"divisor": label(cfg, S.divisor(args.alpha - 1))}
    elif args.mu is not None:
        mu = _vec(args.mu)
        if len(mu) != cfg.rank:
            raise ConfigError(f"mu must have length {cfg.rank}")
        fn = S.chevalley_line if args.line else S.chevalley_mu
        forms = {"formula": fn(mu, v, args.basis)}
        what = {"line_bundle" if args.line else "mu": list(mu)}
    else:
        raise ConfigError("chevalley needs --alpha or --mu")
    out = {**what, "v": label(cfg, v), "basis": args.basis, "verified": True,
           "forms": {k: _expansion(cfg, e, fmt) for k, e in forms.items()}}
    return out, EXIT_OK


def cmd_certify(cfg, args, fmt):
    if cfg.symbolic:
        raise ConfigError("certify needs a concrete chi")
    S = Schubert(cfg)
    S0 = nonweighted_engine(cfg)
    u, v = resolve(cfg, args.u), resolve(cfg, args.v)
    res = certify_structure_constants(S, u, v, args.basis, S0, args.limit)
    targets = [resolve(cfg, args.w)] if args.w else [w for w in cfg.reps if w in res.verdicts]
    rows, code = [], EXIT_OK
    for w in targets:
        ok, bad = res.verdicts.get(w, (True, []))
        cert = res.certificates[w]
        row = {"class": label(cfg, w),
               "coeff": _poly(cfg, res.constants.get(w, S.nv), fmt),
               "verified": ok, "violations": bad,
               "certificate": cert.to_json()["terms"],
               "allowed_basepoints": [label(cfg, x) for x in cert.allowed or []]}
        if not ok:
            code = EXIT_NEGATIVE
        if args.basepoint:
            y = resolve(cfg, args.basepoint)
            ex = negroot_expand_at(S, res.constants.get(w, S.nv), y)
            tn = [f"t{i}" for i in range(cfg.datum.n)]
            row["expansion_at"] = {
                "basepoint": label(cfg, y),
                "above_interval": all(cfg.cosets.leq(x, y) for x in cert.allowed or []),
                "in_span": ex.in_span,
                "nonnegative": ex.nonnegative,
                "coords": _poly(cfg, ex.coords, fmt, tn) if ex.coords is not None else None,
            }
            if ex.nonnegative is False:
                code = EXIT_NEGATIVE
        rows.append(row)
    return {"u": label(cfg, u), "v": label(cfg, v), "basis": args.basis, "results": rows}, code


def cmd_reproduce(args, fmt):
    cells = run_fixture(args.name)
    failed = [c for c in cells if not c.ok]
    out = {"fixture": args.name, "cells": len(cells), "passed": len(cells) - len(failed),
           "results": [{"cell": c.name, "ok": c.ok, "detail": c.detail} for c in cells]}
    return out, (EXIT_COMPUTE if failed else EXIT_OK)


# --------------------------------------------------------------------------
def _print_text(obj, indent=0, stream=None):
    stream = stream or sys.stdout
    pad = "  " * indent
    if isinstance(obj, dict):
        if "cell" in obj and "ok" in obj:
            line = f"{pad}[{'PASS' if obj['ok'] else 'FAIL'}] {obj['cell']}"
            print(line + (f"  ({obj['detail']})" if obj["detail"] else ""), file=stream)
            return
        for k, v in obj.items():
            if isinstance(v, list) and v and all(not isinstance(i, (dict, list)) for i in v):
                print(f"{pad}{k}: [{', '.join(str(i) for i in v)}]", file=stream)
            elif isinstance(v, (dict, list)) and v:
                print(f"{pad}{k}:", file=stream)
                _print_text(v, indent + 1, stream)
            else:
                print(f"{pad}{k}: {v}", file=stream)
    elif isinstance(obj, list):
        if all(not isinstance(i, (dict, list)) for i in obj):
            print(f"{pad}{obj}", file=stream)
            return
        for item in obj:
            if isinstance(item, (dict, list)):
                _print_text(item, indent, stream)
                if isinstance(item, dict) and not ("cell" in item):
                    print(file=stream)
            else:
                print(f"{pad}- {item}", file=stream)
    else:
        print(f"{pad}{obj}", file=stream)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wschub", description=__doc__.split("\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="JSON config file ('-' for stdin)")
    common.add_argument("--out", choices=("json", "text"), default="text")
    common.add_argument("--weyl-limit", type=int, default=None)
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("describe", parents=[common], help="list W^P with a_w, q_w and covers")

    r = sub.add_parser("restrict", parents=[common], help="restriction of a class to a fixed point")
    r.add_argument("--w", required=True)
    r.add_argument("--x", required=True)
    r.add_argument("--basis", choices=BASES, default="plain")

    m = sub.add_parser("multiply", parents=[common], help="structure constants of a product")
    m.add_argument("--u", required=True)
    m.add_argument("--v", required=True)
    m.add_argument("--basis", choices=BASES, default="plain")

    c = sub.add_parser("chevalley", parents=[common], help="closed-form Chevalley products")
    c.add_argument("--v", required=True)
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--alpha", type=int, help="1-based simple root of the divisor")
    g.add_argument("--mu", help="weight, comma separated")
    c.add_argument("--line", action="store_true", help="use the line bundle of mu")
    c.add_argument("--basis", choices=BASES, default="plain")

    k = sub.add_parser("certify", parents=[common], help="positivity certificates")
    k.add_argument("--u", required=True)
    k.add_argument("--v", required=True)
    k.add_argument("--w", default=None)
    k.add_argument("--basepoint", default=None)
    k.add_argument("--basis", choices=BASES, default="weighted")
    k.add_argument("--limit", type=int, default=DEFAULT_COLUMN_LIMIT,
                   help="maximum number of root subsets in the LP")

    q = sub.add_parser("reproduce", help="recompute a worked example cell by cell")
    q.add_argument("name", choices=sorted(FIXTURES))
    q.add_argument("--out", choices=("json", "text"), default="text")
    q.add_argument("--config", default=None, help="ignored")
    return p


COMMANDS = {
    "describe": cmd_describe,
    "restrict": cmd_restrict,
    "multiply": cmd_multiply,
    "chevalley": cmd_chevalley,
    "certify": cmd_certify,
}


def _read_config(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read config {path}: {e}") from None


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.out
    try:
        if args.command == "reproduce":
            out, code = cmd_reproduce(args, fmt)
        else:
            cfg = load_config(_read_config(args.config), args.weyl_limit)
            out, code = COMMANDS[args.command](cfg, args, fmt)
    except (ConfigError, RootDatumError, LabelError, SymbolicChiError) as e:
        print(f"invalid config: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except NotNonnegative as e:
        print(f"negativity found: {e}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (ChevalleyMismatch, NotDivisible, ArithmeticError, ValueError, KeyError) as e:
        print(f"computation error: {e}", file=sys.stderr)
        return EXIT_COMPUTE
    if fmt == "json":
        print(json.dumps(out, indent=2))
    else:
        _print_text(out)
    return code


def main():  # console entry point
    sys.exit(run())


if __name__ == "__main__":
    main()
