"""Cross-checking harness and growth-rate measurement.

``crosscheck`` replays a matching against the instance to confirm
validity, per-order maximality, and (at small sizes) agreement with the
exact search oracle.  ``bench_sweep`` times the delayed greedy across
doubling instance sizes and emits CSV rows; growth ratios across
doublings are the machine-independent way to see that run time tracks
the vertex count, not the edge count.
"""

from __future__ import annotations

import csv
import io as _io
import statistics
import time
from dataclasses import dataclass

from .core import Matching, RdvInstance, adjacency_oracle, bottom_up_order, oracle_adjacency
from .gen import GenConfig, gen_dense, gen_random
from .geometry import assign_coordinates
from .matching import delayed_greedy, maximum_matching_oracle

CSV_FIELDS = ["n", "tree_nodes", "edges", "algo", "median_ns", "matching_size", "seed"]
NOT_MATERIALIZED = "not materialized"

# oracle edge counting is quadratic; skip it above this size
EDGE_COUNT_LIMIT = 256


@dataclass(frozen=True)
class BenchRecord:
    n: int
    tree_nodes: int
    edges: int | str
    algo: str
    median_ns: int
    matching_size: int
    seed: int


@dataclass(frozen=True)
class CheckEntry:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class CrosscheckReport:
    entries: tuple[CheckEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.passed]


def verify_matching(inst: RdvInstance, matching: Matching) -> list[CheckEntry]:
    """Validity and per-order maximality of a matching, via the oracle.

    Replays the processing order: a matched pair must consume a free
    earlier vertex, and a vertex that stays free must have had no free
    neighbor when processed.
    """
    entries: list[CheckEntry] = []

    bad_pairs = [
        (i, j) for i, j in matching.edges() if not adjacency_oracle(inst, i, j)
    ]
    entries.append(
        CheckEntry(
            "validity",
            not bad_pairs,
            "all pairs are edges" if not bad_pairs else f"non-edges in matching: {bad_pairs}",
        )
    )

    coords = assign_coordinates(inst.tree)
    order = bottom_up_order(inst, coords)
    pos = {v: p for p, v in enumerate(order)}
    partner: dict[int, int] = {}
    for i, j in matching.edges():
        partner[i] = j
        partner[j] = i
    free: set[int] = set()
    problem = ""
    for v in order:
        mate = partner.get(v)
        if mate is not None and pos[mate] < pos[v]:
            if mate in free:
                free.remove(mate)
            else:
                problem = f"vertex {v} matched to {mate}, which was not free"
                break
        else:
            blocker = next(
                (u for u in free if adjacency_oracle(inst, u, v)), None
            )
            if blocker is not None and mate is None:
                problem = f"vertex {v} left free despite free neighbor {blocker}"
                break
            if blocker is not None:
                problem = (
                    f"vertex {v} deferred to later partner {mate} "
                    f"despite free neighbor {blocker}"
                )
                break
            free.add(v)
    entries.append(
        CheckEntry("order-maximality", not problem, problem or "greedy replay consistent")
    )
    return entries


def crosscheck(inst: RdvInstance, bound: int = 24) -> CrosscheckReport:
    """Run the delayed greedy and audit the result.

    Always checks validity and per-order maximality; when the instance is
    small enough for the exact search oracle, also checks that the size is
    maximum.  Failures become report entries, not exceptions.
    """
    entries: list[CheckEntry] = []
    try:
        matching = delayed_greedy(inst)
    except Exception as exc:  # report, don't crash the sweep
        return CrosscheckReport((CheckEntry("run", False, f"delayed_greedy raised: {exc}"),))
    entries.append(CheckEntry("run", True, f"matching size {len(matching)}"))
    entries.extend(verify_matching(inst, matching))
    if inst.n <= bound:
        opt, _witness = maximum_matching_oracle(oracle_adjacency(inst), bound)
        entries.append(
            CheckEntry(
                "optimality",
                len(matching) == opt,
                f"delayed {len(matching)} vs exact {opt}",
            )
        )
    return CrosscheckReport(tuple(entries))


def count_edges_oracle(inst: RdvInstance) -> int:
    adj = oracle_adjacency(inst)
    return sum(len(nbrs) for nbrs in adj) // 2


def _bench_instance(family: str, n: int, seed: int) -> RdvInstance:
    if family == "dense":
        return gen_dense(n)
    if family == "random":
        cfg = GenConfig(
            seed=seed, tree_nodes=n, n_vertices=n, max_branching=3, delta=1
        )
        return gen_random(cfg)
    raise ValueError(f"unknown bench family {family!r}")


def bench_sweep(
    family: str,
    exponents: range,
    repeats: int = 5,
    backend: str = "auto",
    seed: int = 20_26,
) -> list[BenchRecord]:
    """Time delayed_greedy on 2**k vertices for k in ``exponents``.

    Wall-clock nanoseconds, median over ``repeats`` runs after one warmup;
    generation and parsing stay outside the timed region.  Edge counts are
    materialized through the oracle only at small sizes.
    """
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    records: list[BenchRecord] = []
    for k in exponents:
        n = 1 << k
        inst_seed = seed + k
        inst = _bench_instance(family, n, inst_seed)
        delayed_greedy(inst, backend=backend)  # warmup
        times: list[int] = []
        size = 0
        for _ in range(repeats):
            t0 = time.perf_counter_ns()
            matching = delayed_greedy(inst, backend=backend)
            times.append(time.perf_counter_ns() - t0)
            size = len(matching)
        edges: int | str = (
            count_edges_oracle(inst) if n <= EDGE_COUNT_LIMIT else NOT_MATERIALIZED
        )
        records.append(
            BenchRecord(
                n=n,
                tree_nodes=inst.tree.node_count,
                edges=edges,
                algo=f"delayed-{backend}",
                median_ns=int(statistics.median(times)),
                matching_size=size,
                seed=inst_seed,
            )
        )
    return records


def records_to_csv(records: list[BenchRecord], repeats: int) -> str:
    buf = _io.StringIO()
    buf.write(
        f"# median wall-clock ns over {repeats} repeats; "
        "timing excludes generation and parsing\n"
    )
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS)
    writer.writeheader()
    for rec in records:
        writer.writerow(
            {
                "n": rec.n,
                "tree_nodes": rec.tree_nodes,
                "edges": rec.edges,
                "algo": rec.algo,
                "median_ns": rec.median_ns,
                "matching_size": rec.matching_size,
                "seed": rec.seed,
            }
        )
    return buf.getvalue()


def doubling_ratios(records: list[BenchRecord]) -> list[float]:
    """Median-time ratios between consecutive doublings of n."""
    by_n = sorted(records, key=lambda r: r.n)
    return [
        b.median_ns / a.median_ns for a, b in zip(by_n, by_n[1:])
    ]
