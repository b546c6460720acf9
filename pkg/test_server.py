from fastapi.testclient import TestClient

from server import app

client = TestClient(app)


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_gates_listing():
    gates = client.get("/api/gates").json()
    assert len(gates) == 15
    c3 = client.get("/api/gates", params={"level": "c3"}).json()
    assert sorted(g["name"] for g in c3) == ["CCX", "CCZ", "CH", "CS", "CSWAP", "T"]


def test_simulate_with_verification():
    body = {"circuit": "qubits 3\ninit plus\nCCZ 1 2 3\n", "verify": True, "amplitudes": True}
    response = client.post("/api/simulate", json=body)
    assert response.status_code == 200
    report = response.json()
    assert report["verified"] is True
    assert len(report["terms"]) == 2
    assert len(report["amplitudes"]) == 8
    assert report["amplitudes"][7] == ["-0.353553", "0.000000"]


def test_simulate_omits_unrequested_fields():
    response = client.post("/api/simulate", json={"circuit": "qubits 1\nH 1\n"})
    report = response.json()
    assert "verified" not in report and "amplitudes" not in report
    assert report["terms"][0]["vops"] == [""]


def test_bad_circuit_is_rejected():
    response = client.post("/api/simulate", json={"circuit": "qubits 2\nCZ 1 1\n"})
    assert response.status_code == 400
    assert "line 2" in response.json()["detail"]


def test_oracle_cap_is_enforced():
    body = {"circuit": "qubits 3\nT 1\n", "verify": True, "oracle_cap": 2}
    assert client.post("/api/simulate", json=body).status_code == 400
