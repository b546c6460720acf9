"""
Random instances, per-gate timing and magic-state term counts
"""

import logging
import random
import statistics
import time
from typing import List, Optional, Sequence

import logfire
from pydantic import BaseModel

from c3engine import apply_c3
from circuit import Circuit, GateOp
from cliffordsim import cz_table
from coeff import ONE
from gates import GATES
from graph import Graph
from runner import RunOptions, run_circuit
from state import StabilizerTerm, StateSum

logger = logging.getLogger(__name__)

DOUBLING_LIMIT = 2.5

CLIFFORD_NAMES = sorted(name for name, spec in GATES.items() if spec.level == "clifford")
C3_NAMES = sorted(name for name, spec in GATES.items() if spec.level == "c3")


def random_graph(n: int, degree: float, rng: random.Random) -> Graph:
    """Erdős–Rényi graph with expected average degree `degree`"""
    g = Graph(n)
    if n < 2:
        return g
    p = min(1.0, max(0.0, degree / (n - 1)))
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if rng.random() < p:
                g.toggle_edge(a, b)
    return g


def random_term(n: int, rng: random.Random, degree: Optional[float] = None) -> StabilizerTerm:
    if degree is None:
        degree = rng.uniform(0, max(0, n - 1))
    vops = [rng.randrange(24) for _ in range(n)]
    return StabilizerTerm(ONE.mul_omega(rng.randrange(8)), vops, random_graph(n, degree, rng))


def random_operands(n: int, arity: int, rng: random.Random) -> List[int]:
    return rng.sample(range(1, n + 1), arity)


def random_circuit(
    n: int,
    depth: int,
    max_c3: int,
    rng: random.Random,
    init: Optional[str] = None,
) -> Circuit:
    """Mixed Clifford and third-level circuit with at most max_c3 expensive gates"""
    c3_slots = set(rng.sample(range(depth), min(max_c3, depth))) if depth else set()
    gates = []
    for position in range(depth):
        names = C3_NAMES if position in c3_slots else CLIFFORD_NAMES
        names = [name for name in names if GATES[name].arity <= n]
        name = rng.choice(names)
        gates.append(GateOp(name=name, qubits=random_operands(n, GATES[name].arity, rng)))
    return Circuit(n=n, init=init or rng.choice(["plus", "zero"]), gates=gates)


class BenchPoint(BaseModel):
    qubits: int
    degree: float
    samples: int
    median_seconds: float


class BenchRatio(BaseModel):
    axis: str
    fixed: float
    from_value: float
    to_value: float
    ratio: float
    within_limit: bool


class BenchReport(BaseModel):
    gate: str
    points: List[BenchPoint]
    ratios: List[BenchRatio]

    @property
    def all_within_limit(self) -> bool:
        return all(r.within_limit for r in self.ratios)


def time_single_gate(n: int, degree: float, gate: str, samples: int, rng: random.Random) -> float:
    """Median seconds for one gate on a one-term sum"""
    arity = GATES[gate].arity
    timings = []
    for _ in range(samples):
        sum_ = StateSum(n, [random_term(n, rng, degree)])
        operands = random_operands(n, arity, rng)
        started = time.perf_counter()
        apply_c3(sum_, gate, operands)
        timings.append(time.perf_counter() - started)
    return statistics.median(timings)


def _doubling_ratios(points: List[BenchPoint]) -> List[BenchRatio]:
    by_key = {(p.qubits, p.degree): p for p in points}
    ratios = []
    for p in points:
        doubled = (("qubits", (p.qubits * 2, p.degree)), ("degree", (p.qubits, p.degree * 2)))
        for axis, nxt in doubled:
            q = by_key.get(nxt)
            if q is None or p.median_seconds <= 0:
                continue
            ratio = q.median_seconds / p.median_seconds
            ratios.append(
                BenchRatio(
                    axis=axis,
                    fixed=p.degree if axis == "qubits" else p.qubits,
                    from_value=p.qubits if axis == "qubits" else p.degree,
                    to_value=nxt[0] if axis == "qubits" else nxt[1],
                    ratio=ratio,
                    within_limit=ratio <= DOUBLING_LIMIT,
                )
            )
    return ratios


def run_bench(
    qubits: Sequence[int],
    degrees: Sequence[float],
    gate: str = "CCZ",
    samples: int = 25,
    seed: int = 0,
) -> BenchReport:
    cz_table()
    rng = random.Random(seed)
    points = []
    for n in qubits:
        for d in degrees:
            if d > n - 1:
                logger.warning(f"Skipping degree {d} on {n} qubits")
                continue
            median = time_single_gate(n, d, gate, samples, rng)
            points.append(BenchPoint(qubits=n, degree=d, samples=samples, median_seconds=median))
            logger.info(f"{gate} on n={n}, d={d}: median {median * 1e6:.1f}µs")
            logfire.info(
                'Benchmark point',
                service='bench',
                event_type='bench_point',
                gate=gate,
                qubits=n,
                degree=d,
                median_seconds=median,
            )
    report = BenchReport(gate=gate, points=points, ratios=_doubling_ratios(points))
    if not report.all_within_limit:
        logger.warning(f"Some doubling ratios exceed {DOUBLING_LIMIT}x (informational)")
    logfire.info(
        'Benchmark complete',
        service='bench',
        event_type='bench_complete',
        gate=gate,
        points=len(points),
        within_limit=report.all_within_limit,
    )
    return report


class MagicCount(BaseModel):
    qubits: int
    terms: int
    peak_terms: int


def magic_state_counts(max_qubits: int, merge: bool = True) -> List[MagicCount]:
    """Term counts for T^{⊗m}|+⟩^{⊗m}, m = 1..max_qubits"""
    counts = []
    for m in range(1, max_qubits + 1):
        circuit = Circuit(
            n=m,
            init="plus",
            gates=[GateOp(name="T", qubits=[q]) for q in range(1, m + 1)],
        )
        _, stats = run_circuit(circuit, RunOptions(merge=merge))
        counts.append(MagicCount(qubits=m, terms=stats.final_terms, peak_terms=stats.peak_terms))
    return counts
