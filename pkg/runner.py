"""
End-to-end circuit execution on the term-sum representation
"""

import logging
import time
from typing import Tuple

import logfire
from pydantic import BaseModel

from c3engine import apply_c3
from circuit import Circuit
from cliffordsim import apply_clifford
from gates import GATES
from state import MergeCounts, StabilizerTerm, StateSum

logger = logging.getLogger(__name__)


class SimulationError(RuntimeError):
    """A gate failed; carries its 1-based index in the circuit"""

    def __init__(self, gate_index: int, gate: str, cause: Exception):
        self.gate_index = gate_index
        self.gate = gate
        self.cause = cause
        super().__init__(f"gate {gate_index} ({gate}): {cause}")


class RunOptions(BaseModel):
    merge: bool = True


class RunStats(BaseModel):
    final_terms: int
    peak_terms: int
    merges: int
    cancellations: int
    average_degree: float
    wall_time: float
    clifford_gates: int
    c3_gates: int


def initial_state(circuit: Circuit) -> StateSum:
    """|+⟩^n as the bare empty graph; |0⟩^n as H on every vertex"""
    term = StabilizerTerm.plus(circuit.n)
    if circuit.init == "zero":
        for q in range(1, circuit.n + 1):
            apply_clifford(term, "H", (q,))
    return StateSum(circuit.n, [term])


def average_degree(sum_: StateSum) -> float:
    if not len(sum_):
        return 0.0
    return sum(t.graph.average_degree() for t in sum_) / len(sum_)


def run_circuit(circuit: Circuit, opts: RunOptions = None) -> Tuple[StateSum, RunStats]:
    opts = opts or RunOptions()
    counts = MergeCounts()
    state = initial_state(circuit)
    peak = len(state)
    clifford_gates = c3_gates = 0
    started = time.perf_counter()

    logfire.info(
        'Simulation started',
        service='simulator',
        event_type='run_start',
        qubits=circuit.n,
        gates=len(circuit.gates),
        merge=opts.merge,
    )

    for index, op in enumerate(circuit.gates, start=1):
        try:
            if GATES[op.name].level == "clifford":
                for term in state:
                    apply_clifford(term, op.name, op.qubits)
                clifford_gates += 1
            else:
                state = apply_c3(state, op.name, op.qubits, merge=opts.merge, counts=counts)
                c3_gates += 1
        except Exception as e:
            logger.error(f"Simulation failed at gate {index} ({op}): {e}")
            logfire.error(
                'Simulation failed',
                service='simulator',
                event_type='run_failed',
                gate_index=index,
                gate=str(op),
                error=str(e),
            )
            raise SimulationError(index, str(op), e) from e
        peak = max(peak, len(state))
        logger.debug(f"Gate {index} {op}: {len(state)} term(s)")

    stats = RunStats(
        final_terms=len(state),
        peak_terms=peak,
        merges=counts.merges,
        cancellations=counts.cancellations,
        average_degree=average_degree(state),
        wall_time=time.perf_counter() - started,
        clifford_gates=clifford_gates,
        c3_gates=c3_gates,
    )
    logger.info(
        f"Simulated {len(circuit.gates)} gates on {circuit.n} qubits: "
        f"{stats.final_terms} term(s), peak {stats.peak_terms}"
    )
    logfire.info(
        'Simulation complete',
        service='simulator',
        event_type='run_complete',
        **stats.model_dump(),
    )
    return state, stats
