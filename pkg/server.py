#!/usr/bin/env python3
"""FastAPI server for submitting circuit files to the simulator"""

import os
import logging
from datetime import datetime
from typing import List, Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel
import uvicorn
import logfire

from circuit import CircuitError, parse_circuit
from gates import GATES
from oracle import DEFAULT_CAP, OracleCapError, simulate_dense, sum_to_vector, vector_to_pairs
from report import ReportModel, build_report
from runner import RunOptions, SimulationError, run_circuit

# Configure logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

# Configure Logfire if token is available
if os.environ.get('LOGFIRE_WRITE_TOKEN'):
    logfire.configure(token=os.environ.get('LOGFIRE_WRITE_TOKEN'))
    logger.info('Logfire initialized')
else:
    logger.info('Logfire not configured (no LOGFIRE_WRITE_TOKEN)')

# Initialize FastAPI app
app = FastAPI(
    title="C3 Graph-State Simulator API",
    description="Exact simulation of Clifford + third-level circuits on sums of graph states",
    version="1.0.0"
)

# Instrument FastAPI with Logfire if configured
if os.environ.get('LOGFIRE_WRITE_TOKEN'):
    logfire.instrument_fastapi(app)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


class SimulateRequest(BaseModel):
    circuit: str
    merge: bool = True
    verify: bool = False
    amplitudes: bool = False
    oracle_cap: int = DEFAULT_CAP


class GateResponse(BaseModel):
    name: str
    arity: int
    level: str
    description: str


@app.post("/api/simulate", response_model=ReportModel, response_model_exclude_none=True)
async def simulate(body: SimulateRequest, request: Request):
    """Simulate a circuit given in the circuit file format"""
    try:
        circuit = parse_circuit(body.circuit)
    except CircuitError as e:
        raise HTTPException(status_code=400, detail=str(e))

    logfire.info(
        'Simulate request',
        service='api',
        event_type='simulate_request',
        qubits=circuit.n,
        gates=len(circuit.gates),
        merge=body.merge,
        verify=body.verify,
        ip=request.client.host if request.client else 'unknown'
    )

    if (body.verify or body.amplitudes) and circuit.n > body.oracle_cap:
        raise HTTPException(
            status_code=400,
            detail=f"{circuit.n} qubits exceeds the dense oracle cap of {body.oracle_cap}",
        )

    try:
        opts = RunOptions(merge=body.merge)
        state, stats = run_circuit(circuit, opts)
    except SimulationError as e:
        raise HTTPException(status_code=400, detail=str(e))

    amplitudes = None
    verified = None
    try:
        if body.verify or body.amplitudes:
            vector = sum_to_vector(state, body.oracle_cap)
            if body.amplitudes:
                amplitudes = vector_to_pairs(vector)
            if body.verify:
                verified = vector == simulate_dense(circuit, body.oracle_cap)
    except OracleCapError as e:
        raise HTTPException(status_code=400, detail=str(e))

    if verified is False:
        logger.error("Verification failed for submitted circuit")
    return build_report(state, stats, amplitudes=amplitudes, verified=verified)


@app.get("/api/gates", response_model=List[GateResponse])
async def get_gates(level: Optional[str] = None):
    """Supported gates, optionally filtered by hierarchy level"""
    return [
        GateResponse(**spec._asdict())
        for spec in GATES.values()
        if level is None or spec.level == level
    ]


@app.get("/health")
async def health_check():
    """Health check endpoint"""
    return {"status": "healthy", "timestamp": datetime.now().isoformat()}


def main():
    """Main entry point for the application."""
    port = int(os.environ.get("PORT", 8001))
    logger.info(f"Starting server on port {port}")
    print("🚀 Starting C3 simulator API server...")
    print(f"📍 API docs: http://localhost:{port}/docs")
    uvicorn.run(app, host="0.0.0.0", port=port)


if __name__ == "__main__":
    main()
