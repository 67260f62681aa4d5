"""``tourlink`` command line.

Exit status: 0 on success, 1 when a verification or validation fails,
2 on usage errors.  Reports go to ``--out``/``--report`` (or stdout);
progress goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import constructions
from .catalogue import VERIFY_COMMANDS, load_catalogue, verify_class
from .digraph import DomainError, Tournament, dumps, from_json, to_dot
from .isoenum import enumerate_tournaments
from .linking import gap_table, random_linking_matrix, select_index_set, simulate_zcycle_linking

log = logging.getLogger("tourlink")

FORMATS = {
    "enumerate": ("jsonl",),
    "verify": ("json", "md"),
    "build": ("json", "dot"),
    "validate": ("json", "md"),
    "gf2-demo": ("md", "json"),
    "gap-table": ("md", "json"),
    "export": ("dot",),
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    catalogue: str | None = None
    construction: str | None = None
    jobs: int = 1
    seed: int = 0
    output: str | None = None
    format: str | None = None

    def __post_init__(self):
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        allowed = FORMATS[self.command]
        if self.format is None:
            self.format = allowed[0]
        elif self.format not in allowed:
            raise UsageError(f"format {self.format!r} not valid for {self.command}; use one of {allowed}")


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cmd_enumerate(cfg: RunConfig) -> int:
    lines = [dumps(t) for t in enumerate_tournaments(cfg.n, jobs=cfg.jobs)]
    log.info("%d isomorphism classes on %d vertices", len(lines), cfg.n)
    _emit("\n".join(lines) + "\n", cfg.output)
    return 0


def _report_md(report) -> str:
    s = report.summary()
    out = [f"# {report.command}", "", f"catalogue: {report.catalogue}, n = {report.n}", ""]
    out += [f"- {k}: {v}" for k, v in s.items()]
    out += ["", f"result: {'PASS' if report.ok else 'FAIL'}", ""]
    return "\n".join(out)


def _cmd_verify(cfg: RunConfig) -> int:
    n, catname, policy = VERIFY_COMMANDS[cfg.catalogue]
    report = verify_class(n, load_catalogue(catname), policy, jobs=cfg.jobs, command=cfg.catalogue)
    log.info("%s: %s in %.1fs", cfg.catalogue, report.summary(), report.seconds)
    _emit(_json(report.to_json()) if cfg.format == "json" else _report_md(report), cfg.output)
    return 0 if report.ok else 1


def _construction_json(con: constructions.NamedConstruction) -> dict:
    d = con.graph.to_json()
    d["construction"] = con.name
    d["roles"] = dict(sorted(con.roles.items(), key=lambda kv: kv[1]))
    return d


def _cmd_build(cfg: RunConfig) -> int:
    con = constructions.build(cfg.construction, cfg.n)
    if cfg.format == "dot":
        _emit(to_dot(con.graph, con.name.replace("-", "_"), con.labels()), cfg.output)
    else:
        _emit(json.dumps(_construction_json(con), separators=(",", ":")) + "\n", cfg.output)
    return 0


def _load_target(target: str, n: int | None):
    """A construction name, or a JSON file written by ``build``."""
    if target in constructions.BUILDERS:
        return constructions.build(target, n), None
    path = Path(target)
    if not path.exists():
        raise UsageError(f"{target!r} is neither a construction name nor a file")
    data = json.loads(path.read_text(encoding="utf-8"))
    graph = from_json(data)
    name = data.get("construction")
    if name is None:
        raise UsageError(f"{target} does not record which construction it is")
    if name.startswith("nlinked-"):
        con = constructions.build_nlinked(int(name.split("-")[1]))
    else:
        con = constructions.build(name)
    if "roles" in data:
        con = constructions.NamedConstruction(con.name, con.graph, data["roles"], con.skeleton, con.meta)
    if not isinstance(graph, Tournament):
        raise UsageError(f"{target} is not a tournament")
    return con, graph


def _cmd_validate(cfg: RunConfig) -> int:
    con, graph = _load_target(cfg.construction, cfg.n)
    checks = constructions.validate(con, graph)
    ok = all(checks.values())
    if cfg.format == "json":
        text = _json({"construction": con.name, "ok": ok, "checks": checks})
    else:
        text = "".join(f"{'PASS' if v else 'FAIL'} {k}\n" for k, v in checks.items())
    _emit(text, cfg.output)
    return 0 if ok else 1


def _cmd_export(cfg: RunConfig) -> int:
    con, graph = _load_target(cfg.construction, cfg.n)
    _emit(to_dot(graph or con.graph, con.name.replace("-", "_"), con.labels()), cfg.output)
    return 0


def _cmd_gf2_demo(cfg: RunConfig) -> int:
    n = cfg.n if cfg.n is not None else 3
    rng = random.Random(cfg.seed)
    size = (2 * n - 3) ** 2
    m = random_linking_matrix(size, rng)
    c = 0
    for j in rng.sample(range(size), rng.randint(0, n - 2)):
        c |= 1 << j
    sel = select_index_set(m, n)
    linked = simulate_zcycle_linking(m, c, n)
    result = {
        "n": n,
        "seed": cfg.seed,
        "M": m.to_lists(),
        "I": sorted(sel.indices),
        "V": sel.vector_list(),
        "branch": sel.branch,
        "weight_V": sel.weight,
        "c": [c >> j & 1 for j in range(size)],
        "linked_targets": sorted(linked),
        "linked_count": len(linked),
        "required": n - 1,
    }
    if cfg.format == "json":
        text = _json(result)
    else:
        text = (
            f"M ({size}x{size}):\n{m}\n\nI = {result['I']}\nV = {''.join(map(str, result['V']))}"
            f" (weight {sel.weight}, {sel.branch})\nlinked targets: {len(linked)} >= {n - 1}\n"
        )
    _emit(text, cfg.output)
    return 0 if len(linked) >= n - 1 else 1


def _cmd_gap_table(cfg: RunConfig) -> int:
    table = gap_table(cfg.n if cfg.n is not None else 10)
    _emit(_json(table.to_json()) if cfg.format == "json" else table.to_markdown(), cfg.output)
    return 0


COMMANDS = {
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "build": _cmd_build,
    "validate": _cmd_validate,
    "export": _cmd_export,
    "gf2-demo": _cmd_gf2_demo,
    "gap-table": _cmd_gap_table,
}


def run(cfg: RunConfig) -> int:
    return COMMANDS[cfg.command](cfg)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tourlink", description="Intrinsic linking and knotting checks for tournaments.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="one tournament per isomorphism class, as JSON lines")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--out")
    e.add_argument("--jobs", type=int, default=1)

    v = sub.add_parser("verify", help="certify every isomorphism class against an embedding catalogue")
    v.add_argument("target", choices=sorted(VERIFY_COMMANDS))
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--report", dest="out")
    v.add_argument("--format", choices=FORMATS["verify"])

    b = sub.add_parser("build", help="generate a named construction")
    b.add_argument("name", choices=sorted(constructions.BUILDERS))
    b.add_argument("--n", type=int)
    b.add_argument("--out")
    b.add_argument("--format", choices=FORMATS["build"])

    va = sub.add_parser("validate", help="run a construction's structural validator")
    va.add_argument("target", help="construction name or JSON file from build")
    va.add_argument("--n", type=int)
    va.add_argument("--out")
    va.add_argument("--format", choices=FORMATS["validate"])

    x = sub.add_parser("export", help="write a construction as graphviz DOT")
    x.add_argument("target")
    x.add_argument("--n", type=int)
    x.add_argument("--out")
    x.add_argument("--format", choices=FORMATS["export"], default="dot")

    g = sub.add_parser("gf2-demo", help="random linking matrix, index set and linked-target count")
    g.add_argument("--n", type=int, default=3)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.add_argument("--format", choices=FORMATS["gf2-demo"])

    t = sub.add_parser("gap-table", help="bounds on the consistency gap")
    t.add_argument("--max-n", dest="n", type=int, default=10)
    t.add_argument("--out")
    t.add_argument("--format", choices=FORMATS["gap-table"])
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        cfg = RunConfig(
            command=args.command,
            n=getattr(args, "n", None),
            catalogue=args.target if args.command == "verify" else None,
            construction=getattr(args, "name", None) or getattr(args, "target", None),
            jobs=getattr(args, "jobs", 1),
            seed=getattr(args, "seed", 0),
            output=getattr(args, "out", None),
            format=getattr(args, "format", None),
        )
        return run(cfg)
    except (UsageError, DomainError) as exc:
        parser.print_usage(sys.stderr)
        print(f"tourlink: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
