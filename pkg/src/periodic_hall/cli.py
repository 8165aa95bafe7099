"""Command line: ``periodic-hall {catalog,hall,verify,lie}``.

Exit codes: 0 success, 1 an identity was violated, 2 bad usage or config.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .cache import Cache
from .hall import HallAlgebra
from .linalg import DEFAULT_GUARD, SUPPORTED_Q, EnumerationTooLarge
from .liealg import HallLie, chevalley_compare
from .quiverrep import Quiver, QuiverError
from .rootcat import RootCategory
from .suites import SUITES, SuiteReport, run_suite

log = logging.getLogger("periodic_hall")

NOTES = [
    "u_X . u_X[1] is taken as sum_L g_{X[1]X}^L u_L + theta_X[1]; the u_L factor is inserted.",
    "u_Y . theta_X and theta_X . u_Y use +dim Hom(X[1],Y)/d(X) and +dim Hom(Y,X)/d(X); "
    "the opposite sign leaves the theta-associator at twice the defect.",
]

PARALLEL_SUITES = {"integrality", "associativity", "theta-associativity"}


class ConfigError(Exception):
    pass


@dataclass
class SessionConfig:
    quiver: Quiver
    q: int
    guard: int = DEFAULT_GUARD
    out: Path | None = None
    cache_dir: Path | None = None
    jobs: int = 1
    suite: str = "all"
    literal_theta: bool = False
    timings: bool = False


def build_parser():
    p = argparse.ArgumentParser(prog="periodic-hall",
                                description="Hall numbers and Lie algebras of root categories of Dynkin quivers.")
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--type", help="Dynkin type such as A2, D4, E6")
    src.add_argument("--quiver-file", type=Path, help="text file with 'vertices n' and 'arrow i j' lines (1-based)")
    common.add_argument("--q", type=int, default=2, help=f"field size, one of {SUPPORTED_Q}")
    common.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="largest single enumeration")
    common.add_argument("--out", type=Path, help="output directory")
    common.add_argument("--cache-dir", type=Path, help="directory for cached tables")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for the scans")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings in reports")
    sub = p.add_subparsers(dest="verb", required=True)
    sub.add_parser("catalog", parents=[common], help="list ind C_2 with d(X), |Aut X| and Hom dimensions")
    sub.add_parser("hall", parents=[common], help="g, gbar, F and cone-count tables")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", default="all", choices=list(SUITES) + ["all"])
    v.add_argument("--literal-theta", action="store_true",
                   help="use the opposite sign in the theta rules (expected to fail for q > 3)")
    sub.add_parser("lie", parents=[common], help="structure constants and Chevalley comparison")
    return p


def make_config(args):
    if args.type and args.quiver_file:
        raise ConfigError("give either --type or --quiver-file")
    try:
        if args.quiver_file:
            try:
                text = args.quiver_file.read_text()
            except OSError as e:
                raise ConfigError(f"cannot read quiver file: {e}") from None
            quiver = Quiver.from_text(text)
        else:
            quiver = Quiver.from_type(args.type or "A2")
    except QuiverError as e:
        raise ConfigError(str(e)) from None
    if args.q not in SUPPORTED_Q:
        raise ConfigError(f"q must be one of {SUPPORTED_Q}, got {args.q}")
    if args.guard < 1:
        raise ConfigError("--guard must be positive")
    if args.jobs < 1:
        raise ConfigError("--jobs must be positive")
    return SessionConfig(quiver=quiver, q=args.q, guard=args.guard, out=args.out, cache_dir=args.cache_dir,
                         jobs=args.jobs, suite=getattr(args, "suite", "all"),
                         literal_theta=getattr(args, "literal_theta", False), timings=args.timings)


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write(cfg, name, text):
    if cfg.out is None:
        return
    cfg.out.mkdir(parents=True, exist_ok=True)
    (cfg.out / name).write_text(text)


def _cache(cfg):
    return Cache(cfg.cache_dir) if cfg.cache_dir else None


def _cached(cfg, table, compute):
    cache = _cache(cfg)
    if cache is None:
        return compute()
    data = cache.get_or_compute(cfg.quiver, cfg.q, table, compute, extra={"guard": cfg.guard})
    log.info("cache %s for %s", "hit" if cache.hits else "miss", table)
    return data


# catalog

def catalog_data(hall: HallAlgebra):
    rc = hall.rc
    ind = rc.indecomposables
    objs = []
    for X in ind:
        (i, s), = X.parts
        objs.append({
            "name": rc.name(X),
            "module": rc.catalog.name(i),
            "parity": s,
            "dim_vector": list(rc.catalog.roots[i]),
            "groth": [int(v) for v in rc.groth(X)],
            "d": rc.d_value(X),
            "aut": rc.aut_order(X),
            "complex": rc.obj(X).to_json(),
        })
    homs = [[rc.hom_dim(X, Y) for Y in ind] for X in ind]
    return {"type": rc.quiver.type, "quiver": rc.quiver.to_text(), "q": rc.q,
            "objects": objs, "hom_dims": homs}


def cmd_catalog(cfg, hall):
    data = _cached(cfg, "catalog", lambda: catalog_data(hall))
    _write(cfg, "catalog.json", _dump(data))
    print(f"{data['type']} over F_{data['q']}: {len(data['objects'])} indecomposable objects")
    for o in data["objects"]:
        print(f"  {o['name']:<16} dim={o['dim_vector']} d={o['d']} |Aut|={o['aut']}")
    return 0


# hall tables

def hall_data(hall: HallAlgebra):
    rc = hall.rc
    ind = rc.indecomposables
    name = rc.name
    g_rows, gbar_rows, f_rows, cone_rows, skipped, partition_bad = [], [], [], [], [], []
    for U in ind:
        for V in ind:
            try:
                mids = hall.middle_terms(U, V)
            except EnumerationTooLarge as e:
                skipped.append({"table": "g", "cell": [name(U), name(V)], "reason": str(e)})
                continue
            for W in mids:
                g_rows.append((U, V, W, hall.g(U, V, W)))
                gbar_rows.append((U, V, W, hall.gbar(U, V, W)))
                try:
                    f_rows.append((U, V, W, hall.F_value(U, V, W)))
                except EnumerationTooLarge as e:
                    skipped.append({"table": "F", "cell": [name(U), name(V), name(W)], "reason": str(e)})
            dist = hall.cone_distribution(U, V)
            if sum(dist.values()) != rc.hom(U, V).size:
                partition_bad.append([name(U), name(V)])
            for C, n in sorted(dist.items()):
                cone_rows.append((U, V, C, n))
    return {
        "type": rc.quiver.type, "q": rc.q,
        "g": hall.table_csv(g_rows), "gbar": hall.table_csv(gbar_rows),
        "F": hall.table_csv(f_rows),
        "cones": "U,W,V,count\n" + "".join(f"{name(U)},{name(W)},{name(V)},{n}\n" for U, W, V, n in cone_rows),
        "json": {"g": hall.table_json(g_rows), "gbar": hall.table_json(gbar_rows),
                 "F": hall.table_json(f_rows)},
        "skipped": skipped,
        "partition_violations": partition_bad,
    }


def cmd_hall(cfg, hall):
    data = _cached(cfg, "hall", lambda: hall_data(hall))
    for key in ("g", "gbar", "F", "cones"):
        _write(cfg, f"{key}.csv", data[key])
    _write(cfg, "hall.json", _dump({"type": data["type"], "q": data["q"], "tables": data["json"],
                                    "skipped": data["skipped"]}))
    print(f"{data['type']} over F_{data['q']}: {data['g'].count(chr(10)) - 1} g entries, "
          f"{data['F'].count(chr(10)) - 1} F entries")
    for s in data["skipped"]:
        print(f"  skipped {s['table']} {s['cell']}: {s['reason']}")
    if data["partition_violations"]:
        print(f"  cone counts do not partition Hom for {data['partition_violations']}")
        return 1
    return 0


# verify

def _suite_worker(args):
    quiver_text, q, guard, name, xs_idx, literal = args
    hall = HallAlgebra(RootCategory(Quiver.from_text(quiver_text), q, guard))
    ind = hall.rc.indecomposables
    kw = {"xs": [ind[i] for i in xs_idx]}
    if name == "theta-associativity":
        kw["literal"] = literal
    return run_suite(name, hall, **kw)


def _merge(name, cfg, parts):
    rep = SuiteReport(name, cfg.quiver.type, cfg.q)
    for p in parts:
        for k, c in p.checks.items():
            tgt = rep.checks.setdefault(k, {"pass": 0, "fail": 0})
            tgt["pass"] += c["pass"]
            tgt["fail"] += c["fail"]
        rep.violations += p.violations
        rep.skipped += p.skipped
        rep.seconds += p.seconds
    return rep


def run_verify(cfg, hall):
    names = list(SUITES) if cfg.suite == "all" else [cfg.suite]
    reports = []
    for name in names:
        kw = {"literal": True} if cfg.literal_theta and name in ("theta-associativity", "star-jacobi") else {}
        if cfg.jobs > 1 and name in PARALLEL_SUITES:
            n = len(hall.rc.indecomposables)
            chunks = [list(range(k, n, cfg.jobs)) for k in range(cfg.jobs)]
            jobs = [(cfg.quiver.to_text(), cfg.q, cfg.guard, name, c, cfg.literal_theta) for c in chunks if c]
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                reports.append(_merge(name, cfg, list(pool.map(_suite_worker, jobs))))
        else:
            reports.append(run_suite(name, hall, **kw))
    return reports


def cmd_verify(cfg, hall):
    reports = run_verify(cfg, hall)
    for r in reports:
        print(r.summary())
        for v in r.violations[:5]:
            print(f"  violation: {json.dumps(v, sort_keys=True, default=str)}")
        for s in r.skipped:
            if s["reason"] != "excluded triple":
                print(f"  skipped: {s['identity']} {s['instance']}: {s['reason']}")
    for note in NOTES:
        print(f"note: {note}")
    ok = all(r.ok for r in reports)
    _write(cfg, "verify.json", _dump({"type": cfg.quiver.type, "q": cfg.q, "ok": ok, "notes": NOTES,
                                      "literal_theta": cfg.literal_theta,
                                      "reports": [r.to_json(cfg.timings) for r in reports]}))
    return 0 if ok else 1


# lie

def cmd_lie(cfg, hall):
    lie = HallLie(hall)
    data = _cached(cfg, "lie", lambda: {"json": lie.export_json(), "csv": lie.export_csv()})
    _write(cfg, "lie.json", _dump(data["json"]))
    _write(cfg, "lie.csv", data["csv"])
    print(f"{cfg.quiver.type} over Z/{cfg.q - 1}: {len(data['json']['brackets'])} nonzero brackets")
    if cfg.q < 4:
        print("chevalley comparison skipped: q >= 4 is needed to separate +1 and -1")
        _write(cfg, "chevalley.json", _dump({"ok": None, "skipped": "q < 4"}))
        return 0
    res = chevalley_compare(lie)
    lines = [f"Chevalley comparison for {res['type']} over Z/{res['modulus']}: "
             f"{'certified' if res['ok'] else 'MISMATCH'} ({res['pairs_checked']} root pairs)"]
    lines += [f"  problem: {p}" for p in res["problems"]]
    if res["signs"]:
        lines.append("  sign gauge: " + ", ".join(f"{k}:{'+' if v > 0 else '-'}" for k, v in res["signs"].items()))
    text = "\n".join(lines) + "\n"
    print(text, end="")
    _write(cfg, "chevalley.txt", text)
    _write(cfg, "chevalley.json", _dump(res))
    return 0 if res["ok"] else 1


VERBS = {"catalog": cmd_catalog, "hall": cmd_hall, "verify": cmd_verify, "lie": cmd_lie}


def main(argv=None, inject=None):
    """Entry point.  ``inject`` (tests only) may modify the HallAlgebra before use."""
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    hall = HallAlgebra(RootCategory(cfg.quiver, cfg.q, cfg.guard))
    if inject is not None:
        inject(hall)
    return VERBS[args.verb](cfg, hall)


if __name__ == "__main__":
    sys.exit(main())
