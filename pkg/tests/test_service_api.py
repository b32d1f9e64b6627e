import pytest
from fastapi.testclient import TestClient

from blowade import __version__
from blowade.api import app
from blowade.schemas import AnalysisRequest, Options
from blowade.service import COMMANDS, run

client = TestClient(app)

SUPERISOLATED = "z1*z2*z3 + z1^4 + z2^4 + z3^4"


def post(command, text, **options):
    return client.post(f"/{command}", json={"input": text, "options": options})


def test_health():
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json()["version"] == __version__
    assert r.json()["commands"] == list(COMMANDS)


def test_analyze_envelope():
    r = post("analyze", SUPERISOLATED)
    assert r.status_code == 200
    body = r.json()
    assert set(body) == {"command", "input", "options", "result", "diagnostics"}
    res = body["result"]
    assert res["is_blow_ade"] and res["m"] == 1 and res["subtype"]["pure_blow_A1"]
    assert res["zeta"] == [{"d": 4, "nu": -3}]
    pt = res["points"][0]
    assert {"coords", "chart", "type", "milnor", "m", "c"} <= set(pt)
    diag = body["diagnostics"]
    assert diag["version"] == __version__ and diag["truncation"] == 64 and diag["seed"] == 0


def test_classify_and_zeta():
    r = post("classify", "x2^2 + x3^5", vars=["x2", "x3"])
    assert (r.json()["result"]["family"], r.json()["result"]["index"]) == ("A", 4)
    z = post("zeta", "z1^2+z2^2+z3^2").json()["result"]
    assert z["degree"] == -2 and z["zeta"] == [{"d": 2, "nu": -1}]
    assert z["newton_number"] == 1


def test_domain_error_is_422():
    r = post("analyze", "z1^2*z2 + z3^4")
    assert r.status_code == 422
    assert r.json()["diagnostics"]["error"]["kind"] == "non_reduced_tangent_cone"


@pytest.mark.parametrize("body", [
    {"input": "z1 +"},
    {"input": SUPERISOLATED, "options": {"truncation": "many"}},
    {"input": SUPERISOLATED, "options": {"colour": "blue"}},
    {},
])
def test_usage_errors_are_400(body):
    assert client.post("/analyze", json=body).status_code == 400


def test_compare_and_blowup():
    r = client.post("/compare", json={"input": SUPERISOLATED, "other": "z1*z2*z3 + 2*z1^4 + z2^4 - z3^4"})
    assert r.status_code == 200 and r.json()["result"]["same_type"] is True
    b = post("blowup", "z2^2*z3 - z1^3 + z1^5 + z2^5 + z3^5").json()["result"]
    assert b["d"] == 3 and b["points"][0]["principal_part"]["m"] == 2


def test_mu_star_notes_heuristic():
    body = post("mu-star", "z1^2 + z2^3 + z3^4").json()
    assert body["result"]["mu3"] == 6
    assert any("heuristic" in n for n in body["diagnostics"]["notes"])


def test_service_matches_api():
    req = AnalysisRequest(input=SUPERISOLATED, options=Options())
    code, report = run("analyze", req)
    assert code == 0
    assert report == post("analyze", SUPERISOLATED).json()
