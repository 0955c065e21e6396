"""Command line front end.

Exit status: 0 success, 2 parse or validation failure, 3 a cap was exceeded,
4 a closed-form verdict disagreed with an oracle.  A ``batch`` run reports the
largest status among its entries.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CapExceeded, LadderError, OracleDisagreement, ShapeError
from .gorenstein import ORACLES, check_gorenstein
from .invariants import invariants
from .ladder import (
    LadderShape,
    blocks,
    format_shape,
    gaps,
    load_shape_file,
    normalize,
    parse_shape,
    shape_from_obj,
    validate,
)
from .lattice import count_lattice, enumerate_lattice, h_vector, hibi_relations
from .minors import diagonal_leading_check, minor_det
from .poset import is_pure, join_irreducibles, to_dot, to_grid

SUBCOMMANDS = (
    "validate",
    "normalize",
    "lattice",
    "poset",
    "gorenstein",
    "invariants",
    "hvector",
    "relations",
    "minors",
    "all",
    "batch",
)

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_DISAGREE = 0, 2, 3, 4


@dataclass
class RunConfig:
    shape_text: str | None = None
    file: str | None = None
    r: int | None = None
    oracles: tuple = ("purity",)
    max_lattice: int = 200_000
    max_chains: int = 1_000_000
    max_det_n: int = 8
    format: str = "text"
    strict: bool = False
    extra: dict = field(default_factory=dict)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ladderfiber",
        description="Ladder lattices, join-irreducible posets and Gorenstein special fibers.",
    )
    ap.add_argument("command", choices=SUBCOMMANDS)
    ap.add_argument("manifest", nargs="?", help="manifest file (batch only)")
    ap.add_argument("--shape", help='shape text such as "1-5,4-6"')
    ap.add_argument("--file", help="shape file (JSON object or shape text)")
    ap.add_argument("--r", type=int, default=None, help="number of copies (default 1)")
    ap.add_argument(
        "--oracles",
        default="purity",
        help="comma list from purity,hvector,joinirr,direct-hilbert or 'none'",
    )
    ap.add_argument("--format", choices=("text", "structured", "dot"), default="text")
    ap.add_argument("--max-lattice", type=int, default=200_000)
    ap.add_argument("--max-chains", type=int, default=1_000_000)
    ap.add_argument("--max-det-n", type=int, default=8)
    ap.add_argument("--strict", action="store_true", help="reject shapes that need normalizing")
    return ap


def _config(ns) -> RunConfig:
    if ns.oracles.strip() in ("", "none"):
        oracles: tuple = ()
    else:
        oracles = tuple(o.strip() for o in ns.oracles.split(",") if o.strip())
    for o in oracles:
        if o not in ORACLES:
            raise ShapeError(f"unknown oracle {o!r}")
    for name in ("max_lattice", "max_chains", "max_det_n"):
        if getattr(ns, name) < 1:
            raise ShapeError(f"--{name.replace('_', '-')} must be positive")
    if ns.r is not None and ns.r < 1:
        raise ShapeError("--r must be at least 1")
    return RunConfig(
        shape_text=ns.shape,
        file=ns.file,
        r=ns.r,
        oracles=oracles,
        max_lattice=ns.max_lattice,
        max_chains=ns.max_chains,
        max_det_n=ns.max_det_n,
        format=ns.format,
        strict=ns.strict,
    )


def _load(cfg: RunConfig) -> tuple[LadderShape, int]:
    if cfg.shape_text is not None and cfg.file is not None:
        raise ShapeError("give either --shape or --file, not both")
    if cfg.shape_text is not None:
        raw, r = parse_shape(cfg.shape_text), 1
    elif cfg.file is not None:
        raw, r = load_shape_file(cfg.file)
    else:
        raise ShapeError("no shape given (use --shape or --file)")
    return raw, cfg.r if cfg.r is not None else r


# ----------------------------------------------------------------- reports


def _shape_section(raw: LadderShape, cfg: RunConfig) -> tuple[LadderShape, dict]:
    shape, trace = normalize(raw, strict=cfg.strict)
    return shape, {
        "input": format_shape(raw),
        "normalized": format_shape(shape),
        "n": shape.n,
        "m": shape.m,
        "trace": [str(s) for s in trace],
    }


def report_validate(raw, r, cfg) -> dict:
    rep = validate(raw)
    return {"shape": format_shape(raw), "ok": rep.ok, "violations": rep.violations}


def report_normalize(raw, r, cfg) -> dict:
    shape, sec = _shape_section(raw, cfg)
    g = gaps(shape)
    bd = blocks(shape)
    sec.update(
        {
            "gaps": g.to_dict(),
            "blocks": {"C": list(bd.C), "blocks": [list(b) for b in bd.blocks], "iMin": list(bd.i_min)},
        }
    )
    return sec


def report_lattice(shape, r, cfg) -> dict:
    count = count_lattice(shape)
    out = {"count": count, "r": r, "productSize": count * r}
    out["elements"] = [list(c) for c in enumerate_lattice(shape, cfg.max_lattice)]
    return out


def report_poset(shape, r, cfg) -> dict:
    P = join_irreducibles(shape, r)
    pur = is_pure(P, cfg.max_chains)
    return {
        "size": len(P),
        "elements": [str(e) for e in P.elements],
        "covers": [[str(P.elements[a]), str(P.elements[b])] for a, b in P.covers],
        "minimal": [str(e) for e in P.minimal()],
        "maximal": [str(e) for e in P.maximal()],
        "components": P.n_components,
        "rank": pur.rank,
        "pure": pur.pure,
        "chainLengths": sorted(pur.lengths),
    }


def report_gorenstein(shape, r, cfg) -> dict:
    rep = check_gorenstein(
        shape,
        r,
        cfg.oracles,
        lattice_cap=cfg.max_lattice,
        chain_cap=cfg.max_chains,
        det_n=cfg.max_det_n,
    )
    return rep.to_dict()


def report_invariants(shape, r, cfg) -> dict:
    return invariants(shape, r).to_dict()


def report_hvector(shape, r, cfg) -> dict:
    hv = h_vector(shape, r, cfg.max_lattice)
    return {"h": list(hv.coeffs), "dim": hv.dim, "degree": hv.degree, "symmetric": hv.is_symmetric()}


def report_relations(shape, r, cfg) -> dict:
    rels = hibi_relations(shape, r, cfg.max_lattice)
    return {"count": len(rels), "relations": [str(x) for x in rels]}


def report_minors(shape, r, cfg) -> dict:
    check = diagonal_leading_check(shape, cfg.max_lattice, cfg.max_det_n)
    minors = {
        ",".join(map(str, c)): str(minor_det(shape, c, cfg.max_det_n))
        for c in enumerate_lattice(shape, cfg.max_lattice)
    }
    return {
        "count": len(minors),
        "diagonalLeading": check.ok,
        "counterexample": None if check.counterexample is None else list(map(str, check.counterexample)),
        "minors": minors,
    }


SECTIONS = {
    "lattice": report_lattice,
    "poset": report_poset,
    "gorenstein": report_gorenstein,
    "invariants": report_invariants,
    "hvector": report_hvector,
    "relations": report_relations,
    "minors": report_minors,
}


# ------------------------------------------------------------------ render


def _render_text(command: str, body: dict) -> str:
    lines = []
    shape = body.get("shape")
    if isinstance(shape, dict):
        lines.append(f"shape: {shape['normalized']}  (input {shape['input']}, n={shape['n']}, m={shape['m']})")
        lines.append("trace: " + (", ".join(shape["trace"]) or "(none)"))
        lines.append(f"r: {body['r']}")
    for key, sec in body.items():
        if key in ("shape", "r"):
            continue
        lines.append(f"[{key}]")
        lines.extend(_text_section(key, sec))
    return "\n".join(lines) + "\n"


def _text_section(key: str, sec) -> list[str]:
    if key == "lattice":
        return [f"count: {sec['count']}", *("(" + ",".join(map(str, c)) + ")" for c in sec["elements"])]
    if key == "relations":
        return [f"count: {sec['count']}", *sec["relations"]]
    if key == "minors":
        head = [f"count: {sec['count']}", f"diagonal leading terms: {sec['diagonalLeading']}"]
        return head + [f"det[{c}] = {p}" for c, p in sec["minors"].items()]
    if key == "poset":
        out = [
            f"size: {sec['size']}",
            f"components: {sec['components']}",
            f"rank: {sec['rank']}",
            f"pure: {sec['pure']} (maximal chain lengths {sec['chainLengths']})",
            "minimal: " + " ".join(sec["minimal"]),
            "maximal: " + " ".join(sec["maximal"]),
        ]
        if "grid" in sec:
            out.append("grid:")
            out.extend("  " + ln for ln in sec["grid"].splitlines())
        out.extend(f"{a} < {b}" for a, b in sec["covers"])
        return out
    if isinstance(sec, dict):
        return [f"{k}: {json.dumps(v, ensure_ascii=False)}" for k, v in sec.items()]
    return [str(sec)]


def _emit(cfg: RunConfig, command: str, body: dict, out) -> None:
    if cfg.format == "structured":
        out.write(json.dumps({"command": command, **body}, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(_render_text(command, body))


# --------------------------------------------------------------------- run


def run_single(command: str, cfg: RunConfig, out) -> int:
    raw, r = _load(cfg)
    if command == "validate":
        rep = report_validate(raw, r, cfg)
        if cfg.format == "structured":
            _emit(cfg, command, rep, out)
        else:
            out.write("ok\n" if rep["ok"] else "".join(f"violation: {v}\n" for v in rep["violations"]))
        return EXIT_OK if rep["ok"] else EXIT_INPUT
    shape, sec = _shape_section(raw, cfg)
    if command == "normalize":
        body = {"shape": sec, "r": r, "normalize": report_normalize(raw, r, cfg)}
        _emit(cfg, command, body, out)
        return EXIT_OK
    if command == "poset" and cfg.format == "dot":
        out.write(to_dot(join_irreducibles(shape, r)))
        return EXIT_OK
    body = {"shape": sec, "r": r}
    if command == "all":
        body["normalize"] = report_normalize(raw, r, cfg)
        for name in ("lattice", "poset", "gorenstein", "invariants", "hvector"):
            body[name] = SECTIONS[name](shape, r, cfg)
    else:
        body[command] = SECTIONS[command](shape, r, cfg)
        if command == "poset":
            body[command]["grid"] = to_grid(shape, r)
    _emit(cfg, command, body, out)
    return EXIT_OK


def _status(exc: Exception) -> int:
    if isinstance(exc, OracleDisagreement):
        return EXIT_DISAGREE
    if isinstance(exc, CapExceeded):
        return EXIT_CAP
    return EXIT_INPUT


def batch(manifest: str, cfg: RunConfig, out) -> int:
    """One row per manifest entry plus Gorenstein/non-Gorenstein totals."""
    try:
        entries = json.loads(Path(manifest).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ShapeError(f"unreadable manifest {manifest}: {exc}") from exc
    if isinstance(entries, dict):
        entries = entries.get("shapes", [])
    if not isinstance(entries, list):
        raise ShapeError("manifest must be a list of shape entries")
    rows = []
    worst = EXIT_OK
    for k, entry in enumerate(entries):
        row = {"entry": k, "shape": None, "r": None, "gorenstein": None, "dim": None, "reg": None, "aInv": None, "status": 0, "error": ""}
        try:
            raw, r = shape_from_obj(entry)
            if cfg.r is not None:
                r = cfg.r
            shape, _ = normalize(raw, strict=cfg.strict)
            row["shape"], row["r"] = format_shape(shape), r
            rep = check_gorenstein(shape, r, cfg.oracles, lattice_cap=cfg.max_lattice, chain_cap=cfg.max_chains, det_n=cfg.max_det_n)
            inv = invariants(shape, r)
            row.update(gorenstein=rep.verdict, dim=inv.dim, reg=inv.reg, aInv=inv.a_inv)
        except LadderError as exc:
            row["status"], row["error"] = _status(exc), str(exc)
            worst = max(worst, row["status"])
        rows.append(row)
    summary = {
        "entries": len(rows),
        "gorenstein": sum(1 for r_ in rows if r_["gorenstein"] is True),
        "nonGorenstein": sum(1 for r_ in rows if r_["gorenstein"] is False),
        "errors": sum(1 for r_ in rows if r_["status"]),
    }
    if cfg.format == "structured":
        out.write(json.dumps({"command": "batch", "rows": rows, "summary": summary}, indent=2) + "\n")
    else:
        cols = ["entry", "shape", "r", "gorenstein", "dim", "reg", "aInv", "status", "error"]
        out.write("\t".join(cols) + "\n")
        for row in rows:
            out.write("\t".join("" if row[c] is None else str(row[c]) for c in cols) + "\n")
        out.write(
            f"# entries={summary['entries']} gorenstein={summary['gorenstein']} "
            f"non-gorenstein={summary['nonGorenstein']} errors={summary['errors']}\n"
        )
    return worst


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = _config(ns)
        if ns.command == "batch":
            if not ns.manifest:
                raise ShapeError("batch needs a manifest path")
            return batch(ns.manifest, cfg, out)
        if ns.manifest:
            raise ShapeError(f"unexpected argument {ns.manifest!r}")
        return run_single(ns.command, cfg, out)
    except OracleDisagreement as exc:
        err.write(f"error: {exc}\n")
        err.write(json.dumps(exc.dump, indent=2, default=str) + "\n")
        return EXIT_DISAGREE
    except LadderError as exc:
        err.write(f"error: {exc}\n")
        return _status(exc)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
