"""Command-line front end.

Graphs travel between commands as edge-list text on stdin/stdout, so
subcommands compose with ordinary shell pipes::

    specbound gen --cycle 5 | specbound spectrum
    specbound gen --paley | specbound color --algorithm function

Analysis commands emit exactly one JSON report per run::

    {"command": ..., "input_digest": ..., "payload": ..., "version": ...}

with keys sorted and every real number rounded to 12 significant digits, so
identical invocations produce byte-identical output.  Exit codes: 0 success,
2 malformed usage or input, 3 a size cap was exceeded.  ``verify`` runs the
built-in invariant suite and exits 0 only if every check passes.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Any, Dict, List, Optional, Tuple

from . import __version__
from .bipartite import (bfs_bipartition_oracle, is_symmetric_spectrum,
                        rotation_two_coloring, spectral_bipartite_test)
from .coloring import (brute_force_chromatic, brute_force_independence,
                       function_graph_color, min_degree_peel_color, wilf_color)
from .generators import (complete, complete_bipartite, cycle, cycle_family,
                         function_graph, paley_tournament, path, petersen,
                         random_regular, subdivide)
from .graphs import (CapExceeded, DirectedGraph, Graph, Transport, bits,
                     canonical_digest, dump_directed_edge_list, dump_edge_list,
                     is_connected, load_directed_edge_list, load_edge_list,
                     mask_of, verify_mass_transport)
from .limits import accumulate_spectra, delta, gap_persistence, max_gap
from .matching import (brouwer_haemers_test, independent_expansion,
                       perfect_matching_oracle, tutte_scan, two_set_inequality)
from .spectral import (TOL, adjacency_spectrum, antidiagonal_spectrum,
                       block_extremes, bounds, laplacian_spectrum,
                       mean_zero_extremes, multiset_close, snapped_floor,
                       spectral_gap, spectral_report)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route argparse failures to exit code 2
        raise UsageError(message)


def _round_reals(obj: Any) -> Any:
    """Round every float to 12 significant digits, recursively."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round_reals(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_reals(v) for v in obj]
    return obj


def _report(command: str, digest: str, payload: Dict[str, Any]) -> str:
    doc = {"command": command, "input_digest": digest,
           "payload": _round_reals(payload), "version": __version__}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _error_json(code: str, message: str) -> str:
    doc = {"error": {"code": code, "message": message}, "version": __version__}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _read_text(args, stdin_text: Optional[str]) -> str:
    if getattr(args, "input", None):
        with open(args.input, "r") as fh:
            return fh.read()
    if stdin_text is not None:
        return stdin_text
    return sys.stdin.read()


def _load_graph(args, stdin_text: Optional[str]) -> Graph:
    return load_edge_list(_read_text(args, stdin_text))


def _mask_list(mask: int) -> List[int]:
    return list(bits(mask))


# ---------------------------------------------------------------------------
# subcommand implementations
# ---------------------------------------------------------------------------

def _cmd_gen(args, stdin_text, out) -> int:
    picked = [name for name in ("cycle", "path", "complete", "complete_bipartite",
                                "petersen", "paley", "random_regular",
                                "function_graph", "subdivide")
              if getattr(args, name) not in (None, False)]
    if len(picked) != 1:
        raise UsageError("gen needs exactly one constructor flag")
    name = picked[0]
    if name == "cycle":
        g = cycle(args.cycle)
    elif name == "path":
        g = path(args.path)
    elif name == "complete":
        g = complete(args.complete)
    elif name == "complete_bipartite":
        a, b = args.complete_bipartite
        g = complete_bipartite(a, b)
    elif name == "petersen":
        g = petersen()
    elif name == "random_regular":
        n, d = args.random_regular
        g = random_regular(n, d, args.seed)
    elif name == "subdivide":
        g = subdivide(_load_graph(args, stdin_text))
    elif name == "paley":
        out.write(dump_directed_edge_list(paley_tournament()))
        return 0
    else:  # function_graph
        maps = []
        for part in args.function_graph.split(";"):
            try:
                maps.append([int(tok) for tok in part.split(",")])
            except ValueError as exc:
                raise UsageError(f"bad map spec {part!r}") from exc
        out.write(dump_directed_edge_list(function_graph(maps)))
        return 0
    out.write(dump_edge_list(g))
    return 0


def _cmd_spectrum(args, stdin_text, out) -> int:
    g = _load_graph(args, stdin_text)
    out.write(_report("spectrum", canonical_digest(g), spectral_report(g, args.tol)))
    return 0


def _cmd_bounds(args, stdin_text, out) -> int:
    g = _load_graph(args, stdin_text)
    b = bounds(g, args.tol)
    payload = {"n": g.n, "d": g.max_degree, "M": b.M, "m": b.m, "wilf": b.wilf,
               "hoffman": b.hoffman, "gap": b.gap, "mL": b.mL, "ML": b.ML,
               "independence_bound": b.independence_bound,
               "mindeg_independence_bound": b.mindeg_independence_bound}
    out.write(_report("bounds", canonical_digest(g), payload))
    return 0


def _cmd_color(args, stdin_text, out) -> int:
    algo = args.algorithm
    if algo == "function":
        d = load_directed_edge_list(_read_text(args, stdin_text))
        digest = hashlib.sha256(dump_directed_edge_list(d).encode()).hexdigest()
        coloring = function_graph_color(d)
        g = d.underlying()
        payload = {"algorithm": algo, "palette_bound": 2 * d.n_functions + 1,
                   "colors": list(coloring.colors),
                   "palette_used": coloring.palette_size,
                   "proper": coloring.proper(g)}
        out.write(_report("color", digest, payload))
        return 0
    g = _load_graph(args, stdin_text)
    digest = canonical_digest(g)
    if algo == "brute":
        payload = {"algorithm": algo, "chromatic": brute_force_chromatic(g)}
    elif algo == "mindeg":
        if args.threshold is None:
            raise UsageError("--algorithm mindeg needs --threshold")
        coloring = min_degree_peel_color(g, args.threshold)
        payload = {"algorithm": algo,
                   "palette_bound": snapped_floor(args.threshold) + 1,
                   "colors": list(coloring.colors),
                   "palette_used": coloring.palette_size,
                   "proper": coloring.proper(g)}
    elif algo == "wilf":
        coloring = wilf_color(g)
        payload = {"algorithm": algo,
                   "palette_bound": snapped_floor(adjacency_spectrum(g, args.tol).max) + 1,
                   "colors": list(coloring.colors),
                   "palette_used": coloring.palette_size,
                   "proper": coloring.proper(g)}
    else:
        raise UsageError(f"unknown coloring algorithm {algo!r}")
    out.write(_report("color", digest, payload))
    return 0


def _cmd_bipartite(args, stdin_text, out) -> int:
    g = _load_graph(args, stdin_text)
    v = spectral_bipartite_test(g, args.tol)
    oracle = bfs_bipartition_oracle(g)
    payload = {
        "symmetric_spectrum": v.symmetric_spectrum,
        "minus_d_in_spectrum": v.minus_d_in_spectrum,
        "bipartition": ([_mask_list(v.bipartition[0]), _mask_list(v.bipartition[1])]
                        if v.bipartition else None),
        "defect": _mask_list(v.defect),
        "regular": v.regular,
        "note": v.note,
        "bfs_bipartite": oracle is not None,
    }
    out.write(_report("bipartite", canonical_digest(g), payload))
    return 0


def _cmd_tutte(args, stdin_text, out) -> int:
    g = _load_graph(args, stdin_text)
    r = tutte_scan(g, mode=args.mode, seed=args.seed, samples=args.samples,
                   tol=args.tol)
    payload = {
        "c_star": r.c_star,
        "witness": _mask_list(r.witness),
        "classical_holds": r.classical_holds,
        "strict_holds": r.strict_holds,
        "mode": r.mode,
        "scanned": r.scanned,
        "bh_condition": r.bh_condition,
        "matching": [list(e) for e in r.matching] if r.matching is not None else None,
    }
    out.write(_report("tutte", canonical_digest(g), payload))
    return 0


def _cmd_limit(args, stdin_text, out) -> int:
    if args.family != "cycle":
        raise UsageError(f"unknown family {args.family!r}")
    family = cycle_family()
    try:
        lo_s, hi_s = args.interval.split(",")
        lo, hi = float(lo_s), float(hi_s)
    except ValueError as exc:
        raise UsageError(f"bad interval {args.interval!r}; want LO,HI") from exc
    acc = accumulate_spectra(family, args.max_n, args.tol)
    gaps = gap_persistence(family, args.max_n, args.tol)
    payload = {
        "family": args.family,
        "max_index": args.max_n,
        "interval": [lo, hi],
        "points_count": len(acc.points),
        "points": list(acc.points) if len(acc.points) <= 512 else None,
        "max_gap": max_gap(acc, (lo, hi)),
        "gaps": [{"index": e.index, "gap": e.gap, "error": e.error}
                 for e in gaps.entries],
    }
    digest_src = f"family={args.family};max_n={args.max_n};interval={lo},{hi}"
    out.write(_report("limit", hashlib.sha256(digest_src.encode()).hexdigest(), payload))
    return 0


# ---------------------------------------------------------------------------
# verify: the built-in invariant suite
# ---------------------------------------------------------------------------

def _verify_checks() -> List[Tuple[str, bool, str]]:
    import math
    import random

    from .coloring import wilf_color as _wilf
    from .enumeration import enumerate_graphs

    checks: List[Tuple[str, bool, str]] = []

    def check(name: str, fn) -> None:
        try:
            detail = fn()
            checks.append((name, True, detail or ""))
        except Exception as exc:  # noqa: BLE001 - verify reports, never crashes
            checks.append((name, False, f"{type(exc).__name__}: {exc}"))

    def c_round_trip():
        for g in (petersen(), cycle(9), complete_bipartite(2, 5)):
            text = dump_edge_list(g)
            assert load_edge_list(text) == g and dump_edge_list(load_edge_list(text)) == text
        return "3 fixtures"

    check("edge-list-round-trip", c_round_trip)

    def c_transport():
        rng = random.Random(7)
        worst = 0.0
        for _ in range(200):
            n = rng.randrange(2, 30)
            es = {(u, v) for u in range(n) for v in range(u + 1, n)
                  if rng.random() < 0.3}
            g = Graph(n, sorted(es))
            w = {}
            for (u, v) in g.edges():
                w[(u, v)] = rng.random()
                w[(v, u)] = rng.random()
            worst = max(worst, verify_mass_transport(Transport(g, w)))
        assert worst <= 1e-12
        return f"200 transports, worst residual {worst:.2e}"

    check("mass-transport", c_transport)

    def c_cycle_spectra():
        for n in range(3, 33):
            want = sorted(2.0 * math.cos(2.0 * math.pi * i / n) for i in range(n))
            got = adjacency_spectrum(cycle(n)).values
            assert multiset_close(want, got, 1e-9)
        return "n=3..32"

    check("cycle-spectra", c_cycle_spectra)

    def c_biregular():
        for a in range(1, 5):
            for b in range(a, 5):
                m_val = adjacency_spectrum(complete_bipartite(a, b)).max
                assert abs(m_val - math.sqrt(a * b)) <= 1e-9
        for g, d in ((cycle(4), 2), (complete(4), 3)):
            assert abs(adjacency_spectrum(subdivide(g)).max - math.sqrt(2 * d)) <= 1e-9
        return "K_ab a,b<=4 and two subdivisions"

    check("biregular-and-subdivision-norms", c_biregular)

    def c_antidiagonal():
        rng = random.Random(11)
        for _ in range(20):
            n = rng.randrange(2, 12)
            es = {(u, v) for u in range(n) for v in range(u + 1, n)
                  if rng.random() < 0.4}
            g = Graph(n, sorted(es))
            spec = adjacency_spectrum(g).values
            sym = sorted(list(spec) + [-v for v in spec])
            assert multiset_close(antidiagonal_spectrum(g).values, sym, 1e-8)
        return "20 seeded graphs"

    check("antidiagonal-symmetrization", c_antidiagonal)

    def c_block():
        rng = random.Random(13)
        for _ in range(30):
            n = rng.randrange(2, 18)
            es = {(u, v) for u in range(n) for v in range(u + 1, n)
                  if rng.random() < 0.35}
            g = Graph(n, sorted(es))
            k = rng.randrange(2, 6)
            parts = [0] * k
            for v in range(n):
                parts[rng.randrange(k)] |= 1 << v
            ext = block_extremes(g, parts)
            spec = adjacency_spectrum(g)
            m_t, big_m = spec.min, spec.max
            total = sum(e.M for e in ext)
            assert (k - 1) * m_t + big_m <= total + 1e-8
            for e in ext:
                assert e.M <= big_m + 1e-8 and e.m >= m_t - 1e-8
        return "30 seeded (graph, partition) pairs"

    check("block-inequality", c_block)

    def c_sandwich():
        for n in range(1, 7):
            for g in enumerate_graphs(n, connected=True):
                b = bounds(g)
                chi = brute_force_chromatic(g)
                col = _wilf(g)
                assert col.proper(g) and col.is_total
                assert col.palette_size <= b.wilf
                assert chi <= b.wilf
                if b.hoffman is not None:
                    assert b.hoffman <= chi
        return "all connected graphs n<=6"

    check("chromatic-sandwich", c_sandwich)

    def c_bipartite_equiv():
        for n in range(2, 7):
            for g in enumerate_graphs(n, connected=True):
                v = spectral_bipartite_test(g)
                oracle = bfs_bipartition_oracle(g) is not None
                assert v.symmetric_spectrum == oracle
                if g.is_regular:
                    assert v.minus_d_in_spectrum == oracle
        return "all connected graphs n<=6"

    check("bipartite-equivalence", c_bipartite_equiv)

    def c_independence():
        for n in range(2, 7):
            for g in enumerate_graphs(n, connected=True):
                alpha, _ = brute_force_independence(g)
                b = bounds(g)
                if b.independence_bound is not None:
                    assert alpha / g.n <= b.independence_bound + 1e-9
                if b.mindeg_independence_bound is not None:
                    assert alpha / g.n <= b.mindeg_independence_bound + 1e-9
        return "all connected graphs n<=6"

    check("independence-bounds", c_independence)

    def c_tutte():
        for n in (2, 4, 6):
            for g in enumerate_graphs(n, connected=True):
                r = tutte_scan(g)
                assert r.classical_holds == (r.matching is not None)
        assert brouwer_haemers_test(complete(4)) and brouwer_haemers_test(cycle(4))
        assert not brouwer_haemers_test(petersen())
        return "all connected graphs n in {2,4,6} + fixtures"

    check("tutte-equivalence", c_tutte)

    def c_two_set():
        r = two_set_inequality(petersen(), mask_of([0]), mask_of([3]))
        assert abs(r.lhs - 1.0 / 81.0) <= 1e-12 and abs(r.rhs - 9.0 / 49.0) <= 1e-12
        assert r.holds
        return "Petersen 1/81 <= 9/49"

    check("two-set-inequality", c_two_set)

    def c_rotation():
        alpha = (math.sqrt(5.0) - 1.0) / 2.0
        rc = rotation_two_coloring(alpha, 0.05, 500)
        assert rc.defect_count <= 0.05 * 500 + 1
        for k in range(499):
            if (k * alpha) % 1.0 >= 0.05:
                assert rc.labels[k] != rc.labels[k + 1]
        return f"defect_count={rc.defect_count}"

    check("rotation-coloring", c_rotation)

    def c_function_color():
        d = paley_tournament()
        col = function_graph_color(d)
        assert col.proper(d.underlying()) and col.palette_size <= 7
        rng = random.Random(17)
        for _ in range(30):
            n = rng.randrange(2, 31)
            k = rng.randrange(1, 4)
            maps = [[rng.randrange(n) for _ in range(n)] for _ in range(k)]
            dd = function_graph(maps)
            cc = function_graph_color(dd)
            assert cc.proper(dd.underlying()) and cc.palette_size <= 2 * k + 1
        return "paley + 30 seeded systems"

    check("function-graph-coloring", c_function_color)

    def c_limit():
        acc64 = accumulate_spectra(cycle_family(), 64)
        acc32 = accumulate_spectra(cycle_family(), 32)
        g64 = max_gap(acc64, (-2.0, 2.0))
        g32 = max_gap(acc32, (-2.0, 2.0))
        assert g64 < 0.2 and g64 <= g32 + 1e-12
        for spec in acc64.per_index.values():
            delta(spec, 0.3)  # raises if the norm identity cross-check fails
        return f"max_gap(64)={g64:.4f} <= max_gap(32)={g32:.4f}"

    check("limit-accumulation", c_limit)

    return checks


def _cmd_verify(args, stdin_text, out) -> int:
    checks = _verify_checks()
    ok = all(c[1] for c in checks)
    payload = {"ok": ok,
               "checks": [{"name": n, "ok": o, "detail": d} for n, o, d in checks]}
    digest = hashlib.sha256(b"builtin-fixtures").hexdigest()
    out.write(_report("verify", digest, payload))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    p = _Parser(prog="specbound", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, tol=True, inp=True):
        if inp:
            sp.add_argument("--input", help="edge-list file (default: stdin)")
        if tol:
            sp.add_argument("--tol", type=float, default=TOL,
                            help="numeric tolerance (default 1e-9)")
        sp.add_argument("--json", action="store_true",
                        help="JSON output (default and only mode)")

    sp = sub.add_parser("gen", help="emit a generated graph as edge-list text")
    sp.add_argument("--cycle", type=int)
    sp.add_argument("--path", type=int)
    sp.add_argument("--complete", type=int)
    sp.add_argument("--complete-bipartite", dest="complete_bipartite",
                    type=int, nargs=2, metavar=("A", "B"))
    sp.add_argument("--petersen", action="store_true")
    sp.add_argument("--paley", action="store_true")
    sp.add_argument("--random-regular", dest="random_regular", type=int,
                    nargs=2, metavar=("N", "D"))
    sp.add_argument("--function-graph", dest="function_graph",
                    help="semicolon-separated maps, e.g. '1,2,0;2,0,1'")
    sp.add_argument("--subdivide", action="store_true",
                    help="subdivide the input graph (reads --input/stdin)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--input", help="edge-list file (for --subdivide)")
    sp.set_defaults(fn=_cmd_gen)

    sp = sub.add_parser("spectrum", help="adjacency/Laplacian spectra and extremes")
    add_common(sp)
    sp.set_defaults(fn=_cmd_spectrum)

    sp = sub.add_parser("bounds", help="spectral coloring/matching bounds")
    add_common(sp)
    sp.set_defaults(fn=_cmd_bounds)

    sp = sub.add_parser("color", help="peeling-based colorings and the brute oracle")
    add_common(sp)
    sp.add_argument("--algorithm", choices=["wilf", "function", "mindeg", "brute"],
                    default="wilf")
    sp.add_argument("--threshold", type=float,
                    help="degree bound for --algorithm mindeg")
    sp.set_defaults(fn=_cmd_color)

    sp = sub.add_parser("bipartite", help="spectral bipartiteness indicators")
    add_common(sp)
    sp.set_defaults(fn=_cmd_bipartite)

    sp = sub.add_parser("tutte", help="odd-component scan and matching checks")
    add_common(sp)
    sp.add_argument("--mode", choices=["exhaustive", "randomized"],
                    default="exhaustive")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=2000)
    sp.set_defaults(fn=_cmd_tutte)

    sp = sub.add_parser("limit", help="accumulated spectra along a graph family")
    add_common(sp, inp=False)
    sp.add_argument("--family", default="cycle", help="family name (cycle)")
    sp.add_argument("--max-n", dest="max_n", type=int, default=64)
    sp.add_argument("--interval", default="-2,2", help="LO,HI")
    sp.set_defaults(fn=_cmd_limit)

    sp = sub.add_parser("verify", help="run the built-in invariant suite")
    add_common(sp, inp=False, tol=False)
    sp.set_defaults(fn=_cmd_verify)

    return p


def run(argv: Optional[List[str]] = None, stdin_text: Optional[str] = None,
        out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = _build_parser().parse_args(argv)
        return args.fn(args, stdin_text, out)
    except UsageError as exc:
        out.write(_error_json("usage", str(exc)))
        return 2
    except CapExceeded as exc:
        out.write(_error_json("cap-exceeded", str(exc)))
        return 3
    except FileNotFoundError as exc:
        out.write(_error_json("input", str(exc)))
        return 2
    except (ValueError, RuntimeError) as exc:
        out.write(_error_json("input", str(exc)))
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
