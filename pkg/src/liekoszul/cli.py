"""Command-line front end.

Every run prints one document: the resolved configuration followed by the
result.  Exit status is 0 when all requested checks pass, 1 when a check
fails, 2 on invalid input and 3 when an identity that must hold did not.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import asdict, dataclass
from typing import Sequence

from . import charlib
from .errors import IncomparableError, InternalInconsistencyError, ValidationError
from .koszul import (ext_matrix, find_attaining_weight, global_dimension, grow,
                     hilbert_matrix_ext, hilbert_matrix_sym, koszul_report, pformat)
from .meshquiver import build_mesh_quiver, degree_profile, hom_dimensions, table_rows
from .psi import (check_support_lemma, compute_psi, enumerate_down_set, enumerate_interval,
                  is_positive, sum_free)
from .rootsys import LieType, RootSystem, Weight, build_root_system

SCHEMA = "liekoszul/1"
COMMANDS = ("roots", "psi", "poset", "hilbert", "koszul-check", "gldim", "attain",
            "quiver", "grow")

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    rank: int | None = None
    xi: str | None = None
    lam: str | None = None
    mu: str | None = None
    format: str = "json"
    cache_dir: str | None = None
    bound: int = 6
    depth: int = 4
    seed: int = 0
    trials: int = 0


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*(theta|rho|zero|alpha(\d+)|omega(\d+))\s*")


def parse_weight(rs: RootSystem, text: str) -> Weight:
    """Comma-separated fundamental coordinates, or a symbolic sum like ``2*theta-alpha2``."""
    s = text.strip()
    if re.fullmatch(r"-?\d+(\s*,\s*-?\d+)*", s):
        coords = tuple(int(x) for x in s.split(","))
        if coords == (0,) and rs.rank > 1:
            return rs.zero
        return rs.check(coords)
    out = [0] * rs.rank
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValidationError(f"cannot parse weight {text!r} near {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        if pos and not m.group(1):
            raise ValidationError(f"missing operator in weight {text!r}")
        k = sign * int(m.group(2) or 1)
        name = m.group(3)
        if name == "theta":
            w = rs.theta
        elif name == "rho":
            w = rs.rho
        elif name == "zero":
            w = rs.zero
        else:
            i = int(m.group(4) or m.group(5))
            if not 1 <= i <= rs.rank:
                raise ValidationError(f"index {i} out of range in {text!r}")
            w = rs.simple_root(i) if m.group(4) else rs.fundamental(i)
        out = [a + k * b for a, b in zip(out, w)]
        pos = m.end()
    return tuple(out)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


def _add_common(p: argparse.ArgumentParser, sub: bool) -> None:
    d = argparse.SUPPRESS if sub else None
    p.add_argument("--family", default=d, help="Lie family A-G")
    p.add_argument("--rank", type=int, default=d)
    p.add_argument("--type", dest="lie_type", default=d, help="shorthand such as B3")
    p.add_argument("--xi", default=d, help="defining weight, coordinates or symbolic")
    p.add_argument("--lambda", dest="lam", default=d, help="top weight of the slice")
    p.add_argument("--mu", default=d, help="bottom weight for an interval slice")
    p.add_argument("--format", choices=("json", "csv", "pretty"),
                   default=d if sub else "json")
    p.add_argument("--cache-dir", default=d)
    p.add_argument("--bound", type=int, default=d if sub else 6,
                   help="search bound for attain, number of steps for grow")
    p.add_argument("--depth", type=int, default=d if sub else 4)
    p.add_argument("--seed", type=int, default=d if sub else 0)
    p.add_argument("--trials", type=int, default=d if sub else 0,
                   help="support-lemma trials for the psi command")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="liekoszul", description=__doc__.splitlines()[0])
    _add_common(p, sub=False)
    sp = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        _add_common(sp.add_parser(name), sub=True)
    return p


def parse_config(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(argv)
    family, rank = ns.family, ns.rank
    if ns.lie_type:
        lt = LieType.parse(ns.lie_type)
        family, rank = lt.family, lt.rank
    cfg = RunConfig(command=ns.command, family=family, rank=rank, xi=ns.xi, lam=ns.lam,
                    mu=ns.mu, format=ns.format, cache_dir=ns.cache_dir, bound=ns.bound,
                    depth=ns.depth, seed=ns.seed, trials=ns.trials)
    if cfg.bound < 0 or cfg.depth < 0 or cfg.trials < 0:
        raise ValidationError("bound, depth and trials must be nonnegative")
    return cfg


class _Ctx:
    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self._rs = None

    @property
    def rs(self) -> RootSystem:
        if self._rs is None:
            if self.cfg.family is None or self.cfg.rank is None:
                raise ValidationError(f"{self.cfg.command} needs --family and --rank (or --type)")
            self._rs = build_root_system(LieType(self.cfg.family, self.cfg.rank))
        return self._rs

    def weight(self, attr: str, required: bool = True) -> Weight | None:
        text = getattr(self.cfg, attr)
        if text is None:
            if required:
                flag = {"lam": "--lambda"}.get(attr, "--" + attr)
                raise ValidationError(f"{self.cfg.command} needs {flag}")
            return None
        return parse_weight(self.rs, text)

    def psi(self):
        psi = compute_psi(self.rs, self.weight("xi"))
        if not is_positive(psi):
            raise ValidationError(f"Psi({list(psi.xi)}) is not contained in the positive roots")
        return psi

    def slice(self):
        psi = self.psi()
        lam = self.weight("lam")
        mu = self.weight("mu", required=False)
        if mu is None:
            return enumerate_down_set(psi, lam)
        return enumerate_interval(psi, mu, lam)


def _matrix_rows(name, M):
    return [{"matrix": name, "row": r, "col": c, "degree": d, "coeff": k}
            for r, c, d, k in M.to_rows()]


def cmd_roots(ctx):
    rs = ctx.rs
    doc = rs.to_dict()
    rows = [{"index": i, "fundamental": " ".join(map(str, a["fundamental"])),
             "simple": " ".join(a["simple"])} for i, a in enumerate(doc["positive_roots"])]
    text = (f"{rs.lie_type}: dim g = {rs.dim_g}, |R+| = {len(rs.positive_roots)}, "
            f"theta = {list(rs.theta)}\ncartan = {[list(r) for r in rs.cartan]}")
    return doc, True, rows, text


def cmd_psi(ctx):
    rs = ctx.rs
    psi = compute_psi(rs, ctx.weight("xi"))
    doc = psi.to_dict()
    doc["sum_free"] = sum_free(psi)
    doc["stable_under_rho_xi"] = compute_psi(rs, psi.rho_xi).roots == psi.roots
    ok = doc["sum_free"] and doc["stable_under_rho_xi"]
    if ctx.cfg.trials:
        rep = check_support_lemma(psi, ctx.cfg.trials, ctx.cfg.seed)
        doc["support_lemma"] = rep
        ok = ok and not rep["counterexamples"]
    rows = [{"root": " ".join(map(str, r["fundamental"])), "simple": " ".join(r["simple"])}
            for r in doc["roots"]]
    text = (f"Psi({list(psi.xi)}) = {[list(b) for b in psi.roots]}  (max xi = {psi.max_xi}, "
            f"|Psi| = {len(psi)}, positive = {doc['positive']})")
    return doc, ok, rows, text


def cmd_poset(ctx):
    sl = ctx.slice()
    doc = sl.to_dict()
    rows = [{"weight": " ".join(map(str, m["weight"])), "distance": m["distance"]}
            for m in doc["members"]]
    text = "\n".join(f"{m['weight']}  d={m['distance']}" for m in doc["members"])
    return doc, True, rows, text


def cmd_hilbert(ctx):
    sl = ctx.slice()
    rs = ctx.rs
    H, HE, E = hilbert_matrix_sym(sl), hilbert_matrix_ext(sl), ext_matrix(sl)
    doc = {"hilbert_S": H.to_dict(rs), "hilbert_E": HE.to_dict(), "ext_matrix": E.to_dict()}
    rows = _matrix_rows("hilbert_S", H) + _matrix_rows("hilbert_E", HE) + _matrix_rows("ext", E)
    text = (f"index: {[list(w) for w in H.index]}\nH_S(t):\n{H.pretty()}\n"
            f"H_E(t):\n{HE.pretty()}\next(t):\n{E.pretty()}")
    return doc, True, rows, text


def cmd_koszul(ctx):
    rep = koszul_report(ctx.slice())
    doc = rep.to_dict()
    rows = (_matrix_rows("hilbert_S", rep.hilbert_S) + _matrix_rows("hilbert_E", rep.hilbert_E)
            + _matrix_rows("ext", rep.ext_matrix))
    text = (f"index: {[list(w) for w in rep.hilbert_S.index]}\n"
            f"H_S(t):\n{rep.hilbert_S.pretty()}\next(t):\n{rep.ext_matrix.pretty()}\n"
            f"koszul_ok={rep.koszul_ok} right_inverse_ok={rep.right_inverse_ok} "
            f"duality_ok={rep.duality_ok} gldim={rep.gldim} bound={rep.gldim_bound}")
    return doc, rep.ok, rows, text


def cmd_gldim(ctx):
    sl = ctx.slice()
    gl, wit = global_dimension(sl)
    doc = {"gldim": gl, "bound": len(sl.psi),
           "witness": None if wit is None else [list(w) for w in wit]}
    return doc, gl <= len(sl.psi), [doc | {"witness": str(doc["witness"])}], \
        f"gldim = {gl} <= |Psi| = {len(sl.psi)}, witness {doc['witness']}"


def cmd_attain(ctx):
    psi = ctx.psi()
    mu = find_attaining_weight(psi, ctx.cfg.bound)
    doc = {"search_bound": ctx.cfg.bound, "lambda_psi": list(psi.lambda_psi), "mu": None,
           "top": None, "ext_entry": None}
    ok = False
    if mu is not None:
        top = tuple(a + b for a, b in zip(mu, psi.lambda_psi))
        entry = ext_matrix(enumerate_down_set(psi, top)).entry(mu, top)
        doc.update(mu=list(mu), top=list(top), ext_entry=list(entry))
        ok = entry == (0,) * len(psi) + (1,)
    text = (f"mu = {doc['mu']}, mu + lambda_Psi = {doc['top']}, "
            f"ext entry = {pformat(tuple(doc['ext_entry'] or ()))}")
    return doc, ok, [{k: str(v) for k, v in doc.items()}], text


def cmd_quiver(ctx):
    q = build_mesh_quiver(ctx.cfg.depth)
    table = hom_dimensions(q)
    rows = table_rows(q, table)
    doc = {"quiver": q.to_dict(), "table": rows, "provisional": [list(v) for v in q.provisional()]}
    if ctx.cfg.xi is not None and ctx.cfg.lam is not None:
        H = hilbert_matrix_sym(ctx.slice())
        quiver_prof = degree_profile((r["degree"], r["dim"]) for r in rows
                                     if r["source"] != r["target"])
        hilb_prof = degree_profile((len(p) - 1, p[-1]) for _, _, p in H.nonzero_offdiagonal())
        doc["comparison"] = {
            "quiver_profile": [[d, k, c] for (d, k), c in sorted(quiver_prof.items())],
            "hilbert_profile": [[d, k, c] for (d, k), c in sorted(hilb_prof.items())],
        }
    csv_rows = [{"source": " ".join(map(str, r["source"])), "target": " ".join(map(str, r["target"])),
                 "degree": r["degree"], "dim": r["dim"]} for r in rows]
    text = q.ascii() + "\n\n" + "\n".join(
        f"{tuple(r['source'])} -> {tuple(r['target'])}: dim {r['dim']} (degree {r['degree']})"
        for r in rows)
    return doc, True, csv_rows, text


def cmd_grow(ctx):
    psi = ctx.psi()
    reports = grow(psi, ctx.weight("lam"), ctx.cfg.bound)
    tower = [{"lambda": list(r.slice.top), "size": len(r.slice), "koszul_ok": r.koszul_ok,
              "duality_ok": r.duality_ok, "gldim": r.gldim, "bound": r.gldim_bound, "ok": r.ok}
             for r in reports]
    text = "\n".join(f"lambda={t['lambda']} |F|={t['size']} koszul={t['koszul_ok']} "
                     f"dual={t['duality_ok']} gldim={t['gldim']}/{t['bound']}" for t in tower)
    return {"tower": tower}, all(t["ok"] for t in tower), tower, text


HANDLERS = {"roots": cmd_roots, "psi": cmd_psi, "poset": cmd_poset, "hilbert": cmd_hilbert,
            "koszul-check": cmd_koszul, "gldim": cmd_gldim, "attain": cmd_attain,
            "quiver": cmd_quiver, "grow": cmd_grow}


def _render(fmt, cfg, result, ok, rows, text) -> str:
    if fmt == "json":
        doc = {"schema": SCHEMA, "config": asdict(cfg), "ok": ok, "result": result}
        return json.dumps(doc, sort_keys=True, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        buf.write("# " + json.dumps(asdict(cfg), sort_keys=True) + "\n")
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    header = " ".join(f"{k}={v}" for k, v in asdict(cfg).items() if v is not None)
    return f"# {header}\n{text}\nok: {ok}"


def _error_doc(kind: str, message: str) -> str:
    return json.dumps({"schema": SCHEMA, "error": {"kind": kind, "message": message}},
                      sort_keys=True)


def run(cfg: RunConfig) -> tuple[int, str]:
    if cfg.cache_dir is not None:
        charlib.set_cache_dir(cfg.cache_dir)
    try:
        result, ok, rows, text = HANDLERS[cfg.command](_Ctx(cfg))
    except IncomparableError as exc:
        return EXIT_INVALID, _error_doc("incomparable", str(exc))
    except ValidationError as exc:
        return EXIT_INVALID, _error_doc("validation", str(exc))
    except InternalInconsistencyError as exc:
        return EXIT_INTERNAL, _error_doc("internal_inconsistency", str(exc))
    return (EXIT_OK if ok else EXIT_FAILED), _render(cfg.format, cfg, result, ok, rows, text)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = parse_config(argv)
    except ValidationError as exc:
        print(_error_doc("validation", str(exc)))
        return EXIT_INVALID
    code, out = run(cfg)
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
