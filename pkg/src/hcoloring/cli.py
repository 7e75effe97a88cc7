"""Stream filter: read graphs on stdin, decide H-colorability, write verdicts.

Exit codes: 0 success, 1 usage or hard parse failure, 2 the two solvers
disagreed (``--algorithm both``), 3 some verdicts are ``unknown`` because a
node budget or enumeration guard was hit, 4 ``--mode verify`` rejected a
witness.
"""

from __future__ import annotations

import argparse
import logging
import multiprocessing
import re
import sys
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

from . import formats
from .graph import BUILTINS, Multigraph, builtin, is_2_connected, is_2_edge_connected, line_graph
from .solver import HColoringWitness, SearchBudgetExceeded, solve
from .structure import DEFAULT_ECD_GUARD, EnumerationRefused, chromatic_index, has_ecd_of_size_at_most
from .verifier import WitnessInputError, solve_vertex_first, verify_witness

log = logging.getLogger("hcoloring")

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_UNKNOWN, EXIT_INVALID = 0, 1, 2, 3, 4
MODES = ("decide", "filter-colorable", "filter-uncolorable", "witness", "verify")
ALGORITHMS = ("edge-first", "vertex-first", "both")


class UsageError(ValueError):
    pass


# --------------------------------------------------------------------------
# configuration

@dataclass(frozen=True)
class Prefilter:
    name: str
    value: int | None = None

    def __str__(self) -> str:
        return self.name if self.value is None else f"{self.name}={self.value}"


_FILTER_ALIASES = {
    "simple": "simple",
    "regular": "k-regular",
    "k-regular": "k-regular",
    "2ec": "2-edge-connected",
    "2-edge-connected": "2-edge-connected",
    "2c": "2-connected",
    "2-connected": "2-connected",
    "even-edges": "even-edge-count",
    "even-edge-count": "even-edge-count",
    "even-vertices": "even-vertex-count",
    "even-vertex-count": "even-vertex-count",
    "chi": "chromatic-index",
    "chromatic-index": "chromatic-index",
    "ecd3": "ecd3",
}
_VALUED = {"k-regular", "chromatic-index"}


def parse_filters(text: str) -> list[Prefilter]:
    out = []
    for item in filter(None, (t.strip() for t in text.split(","))):
        raw, _, val = item.replace(":", "=").partition("=")
        name = _FILTER_ALIASES.get(raw.strip().lower())
        if name is None:
            raise UsageError(f"unknown filter {item!r}")
        if name in _VALUED:
            if not val.strip().isdigit():
                raise UsageError(f"filter {name} needs an integer value, e.g. {name}=4")
            out.append(Prefilter(name, int(val)))
        else:
            if val:
                raise UsageError(f"filter {name} takes no value")
            out.append(Prefilter(name))
    return out


def parse_host(spec: str) -> Multigraph:
    """``xbar``, ``ahat``, ``2c3``, ``petersen``, ``k1k:K`` or ``file:PATH``."""
    if spec.startswith("file:"):
        with open(spec[5:]) as fh:
            records = list(formats.read_records(fh))
        if len(records) != 1:
            raise UsageError(f"host file must hold exactly one graph, found {len(records)}")
        return formats.parse_any(records[0])
    name, _, k = spec.partition(":")
    name = name.lower()
    if name in ("2c3", "two_c3"):
        name = "two_c3"
    if name not in BUILTINS:
        raise UsageError(f"unknown host {spec!r}")
    if name == "k1k":
        if not k.isdigit() or int(k) < 1:
            raise UsageError("k1k host needs a positive size, e.g. k1k:4")
        return builtin("k1k", int(k))
    if k:
        raise UsageError(f"host {name} takes no parameter")
    return builtin(name)


@dataclass
class JobConfig:
    host: Multigraph
    algorithm: str = "edge-first"
    mode: str = "decide"
    line_graph: bool = False
    prefilters: list[Prefilter] = field(default_factory=list)
    node_budget: int | None = None
    ecd_guard: int = DEFAULT_ECD_GUARD
    fmt: str = "auto"
    timing: bool = True
    witnesses: dict[int, HColoringWitness] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise UsageError(f"unknown algorithm {self.algorithm!r}")
        if self.mode not in MODES:
            raise UsageError(f"unknown mode {self.mode!r}")
        if self.node_budget is not None and self.node_budget < 1:
            raise UsageError("node budget must be positive")
        if self.ecd_guard < 1:
            raise UsageError("ECD guard must be positive")


# --------------------------------------------------------------------------
# witness text

def format_witness(w: HColoringWitness) -> list[str]:
    return [
        "f: " + " ".join(f"e{i}->h{c}" for i, c in enumerate(w.f)),
        "g: " + " ".join(f"v{v}->w{x}" for v, x in enumerate(w.g)),
    ]


_PAIR = re.compile(r"^([a-z])(\d+)->([a-z])(\d+)$")


def _parse_map(line: str, tag: str, src: str, dst: str) -> tuple[int, ...]:
    body = line[len(tag):].split()
    vals: dict[int, int] = {}
    for tok in body:
        m = _PAIR.match(tok)
        if not m or m.group(1) != src or m.group(3) != dst:
            raise formats.ParseError(f"bad witness token {tok!r}")
        vals[int(m.group(2))] = int(m.group(4))
    if sorted(vals) != list(range(len(vals))):
        raise formats.ParseError(f"witness {tag.strip()} line is not a total map")
    return tuple(vals[i] for i in range(len(vals)))


def read_witnesses(stream: Iterable[str]) -> dict[int, HColoringWitness]:
    """Parse witness-mode output: a verdict line, then ``f:`` and ``g:`` lines."""
    out: dict[int, HColoringWitness] = {}
    current: int | None = None
    f: tuple[int, ...] | None = None
    for raw in stream:
        line = raw.strip()
        if not line:
            continue
        if line.startswith("f:"):
            f = _parse_map(line, "f:", "e", "h")
        elif line.startswith("g:"):
            if current is None or f is None:
                raise formats.ParseError("g: line without preceding verdict and f: lines")
            out[current] = HColoringWitness(f, _parse_map(line, "g:", "v", "w"))
            f = None
        else:
            current = int(line.split("\t")[0])
            f = None
    return out


# --------------------------------------------------------------------------
# per-graph work

@dataclass
class Outcome:
    index: int
    lines: list[str] = field(default_factory=list)
    status: str = "ok"  # ok | dropped | parse-error | unknown | disagree | invalid
    message: str = ""


def _passes(G: Multigraph, pf: Prefilter, cfg: JobConfig) -> bool:
    if pf.name == "simple":
        return G.is_simple()
    if pf.name == "k-regular":
        return G.n > 0 and G.is_regular(pf.value)
    if pf.name == "2-edge-connected":
        return is_2_edge_connected(G)
    if pf.name == "2-connected":
        return is_2_connected(G)
    if pf.name == "even-edge-count":
        return G.m % 2 == 0
    if pf.name == "even-vertex-count":
        return G.n % 2 == 0
    if pf.name == "chromatic-index":
        return G.m > 0 and chromatic_index(G) == pf.value
    if pf.name == "ecd3":
        return has_ecd_of_size_at_most(G, 3, guard=cfg.ecd_guard)
    raise AssertionError(pf.name)


def _decide(G: Multigraph, cfg: JobConfig) -> tuple[HColoringWitness | None, int, str | None]:
    """Return (witness, nodes, disagreement message)."""
    if cfg.algorithm == "vertex-first":
        w, st = solve_vertex_first(G, cfg.host, cfg.node_budget)
        return w, st.nodes, None
    w, st = solve(G, cfg.host, cfg.node_budget)
    if cfg.algorithm == "both":
        w2, _ = solve_vertex_first(G, cfg.host, cfg.node_budget)
        if (w is None) != (w2 is None):
            return w, st.nodes, (
                f"edge-first says {'colorable' if w else 'uncolorable'}, "
                f"vertex-first says {'colorable' if w2 else 'uncolorable'}"
            )
    return w, st.nodes, None


def process(index: int, record: str, cfg: JobConfig) -> Outcome:
    out = Outcome(index)
    try:
        G = formats.parse_record(record, cfg.fmt)
    except (formats.ParseError, ValueError) as exc:
        return Outcome(index, status="parse-error", message=f"graph {index}: {exc}")
    if cfg.line_graph:
        G = line_graph(G)
    t0 = time.perf_counter()
    try:
        if not all(_passes(G, pf, cfg) for pf in cfg.prefilters):
            out.status = "dropped"
            return out
        if cfg.mode == "verify":
            return _verify(index, G, cfg)
        witness, nodes, clash = _decide(G, cfg)
    except (SearchBudgetExceeded, EnumerationRefused) as exc:
        out.status = "unknown"
        out.message = f"graph {index}: {exc}"
        if cfg.mode in ("decide", "witness"):
            out.lines.append(_verdict_line(index, "unknown", getattr(getattr(exc, "stats", None), "nodes", 0), t0, cfg))
        return out
    if clash:
        return Outcome(index, status="disagree", message=f"graph {index}: {clash}")
    verdict = "colorable" if witness is not None else "uncolorable"
    if cfg.mode == "decide":
        out.lines.append(_verdict_line(index, verdict, nodes, t0, cfg))
    elif cfg.mode == "witness":
        out.lines.append(_verdict_line(index, verdict, nodes, t0, cfg))
        if witness is not None:
            out.lines += format_witness(witness)
    elif (cfg.mode == "filter-colorable") == (witness is not None):
        out.lines.append(record)
    return out


def _verdict_line(index: int, verdict: str, nodes: int, t0: float, cfg: JobConfig) -> str:
    cols = [str(index), verdict, str(nodes)]
    if cfg.timing:
        cols.append(str(int((time.perf_counter() - t0) * 1000)))
    return "\t".join(cols)


def _verify(index: int, G: Multigraph, cfg: JobConfig) -> Outcome:
    w = cfg.witnesses.get(index)
    if w is None:
        return Outcome(index, [f"{index}\tmissing"])
    try:
        check = verify_witness(G, cfg.host, w.f, w.g)
    except WitnessInputError as exc:
        return Outcome(index, [f"{index}\tinvalid\t{exc}"], status="invalid")
    if check:
        return Outcome(index, [f"{index}\tvalid"])
    detail = check.reason
    if check.vertex is not None:
        detail += f" (vertex {check.vertex})"
    return Outcome(index, [f"{index}\tinvalid\t{detail}"], status="invalid")


# --------------------------------------------------------------------------
# dispatch

_worker_cfg: JobConfig | None = None


def _init_worker(cfg: JobConfig) -> None:
    global _worker_cfg
    _worker_cfg = cfg


def _work(item: tuple[int, str]) -> Outcome:
    assert _worker_cfg is not None
    return process(item[0], item[1], _worker_cfg)


def iter_outcomes(
    records: Iterable[str], cfg: JobConfig, workers: int = 1, ordered: bool = False
) -> Iterator[Outcome]:
    items = enumerate(records)
    if workers <= 1:
        for i, rec in items:
            yield process(i, rec, cfg)
        return
    ctx = multiprocessing.get_context("fork" if sys.platform != "win32" else "spawn")
    with ctx.Pool(workers, initializer=_init_worker, initargs=(cfg,)) as pool:
        mapper = pool.imap if ordered else pool.imap_unordered
        yield from mapper(_work, items, chunksize=4)


def run(
    stdin: TextIO, stdout: TextIO, cfg: JobConfig, workers: int = 1,
    ordered: bool = False, strict: bool = False,
) -> int:
    unknown = invalid = False
    for res in iter_outcomes(formats.read_records(stdin, cfg.fmt), cfg, workers, ordered):
        if res.status == "parse-error":
            if strict:
                log.error("%s", res.message)
                return EXIT_USAGE
            log.warning("skipping %s", res.message)
            continue
        if res.status == "disagree":
            log.error("solver disagreement on %s", res.message)
            stdout.flush()
            return EXIT_DISAGREE
        if res.status == "unknown":
            unknown = True
            log.warning("%s", res.message)
        invalid |= res.status == "invalid"
        for line in res.lines:
            stdout.write(line + "\n")
    stdout.flush()
    if invalid:
        return EXIT_INVALID
    return EXIT_UNKNOWN if unknown else EXIT_OK


def emit_builtin(spec: str) -> str:
    name, _, k = spec.partition(":")
    if name.lower() not in BUILTINS and name.lower() != "2c3":
        raise UsageError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}")
    if k and not k.isdigit():
        raise UsageError(f"bad parameter in {spec!r}")
    return formats.write_any(builtin(name, int(k) if k else None))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hcoloring",
        description="Decide H-colorability for a stream of graphs (graph6, sparse6 or edge lists).",
    )
    p.add_argument("--host", default="xbar",
                   help="xbar | ahat | 2c3 | k1k:K | petersen | file:PATH (default: xbar)")
    p.add_argument("--format", dest="fmt", choices=("g6", "s6", "el", "auto"), default="auto")
    p.add_argument("--mode", choices=MODES, default="decide")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="edge-first")
    p.add_argument("--line-graph", action="store_true", help="replace each input graph by its line graph")
    p.add_argument("--filter", dest="filters", default="",
                   help="comma list: simple, k-regular=K, 2-edge-connected, 2-connected, "
                        "even-edge-count, even-vertex-count, chromatic-index=V, ecd3")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--ordered", action="store_true", help="keep input order with several workers")
    p.add_argument("--strict", action="store_true", help="abort on the first unparsable graph")
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--ecd-guard", type=int, default=DEFAULT_ECD_GUARD)
    p.add_argument("--witnesses", help="witness-mode output to check in --mode verify")
    p.add_argument("--no-timing", action="store_true", help="omit the milliseconds column")
    p.add_argument("--emit", metavar="NAME[:K]", help="print a built-in graph and exit")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="hcoloring: %(levelname)s: %(message)s")
    try:
        if args.emit:
            stdout.write(emit_builtin(args.emit) + "\n")
            return EXIT_OK
        if args.workers < 1:
            raise UsageError("--workers must be positive")
        witnesses = {}
        if args.mode == "verify":
            if not args.witnesses:
                raise UsageError("--mode verify needs --witnesses FILE")
            with open(args.witnesses) as fh:
                witnesses = read_witnesses(fh)
        cfg = JobConfig(
            host=parse_host(args.host),
            algorithm=args.algorithm,
            mode=args.mode,
            line_graph=args.line_graph,
            prefilters=parse_filters(args.filters),
            node_budget=args.node_budget,
            ecd_guard=args.ecd_guard,
            fmt=args.fmt,
            timing=not args.no_timing,
            witnesses=witnesses,
        )
    except (UsageError, formats.ParseError, OSError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    return run(stdin, stdout, cfg, args.workers, args.ordered, args.strict)


if __name__ == "__main__":
    sys.exit(main())
