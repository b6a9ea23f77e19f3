"""HTTP service routes, payload shapes, and error mapping."""

import pytest
from fastapi.testclient import TestClient

from orbimap.service import create_app

P311 = {"n": 3, "L": 1, "N": 1}
P210 = {"n": 2, "L": 1, "N": 0}
CONES = {"n": 0, "L": 0, "N": 2, "m": [2, 3]}
HARD_WORD = "T1 H1 T1^-1 H1 T1 H1 T1^-1 H1^-1 T1 H1^-1 T1 H1"


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


class TestHealth:
    def test_reports_ok_and_version(self, client):
        body = client.get("/health").json()
        assert body["status"] == "ok"
        assert isinstance(body["version"], str) and body["version"]


class TestNormalForm:
    def test_combs_conjugated_band_into_wrapped_syllable(self, client):
        resp = client.post("/nf", json={"params": P311, "word": "A(2,1) A(3,1) A(2,1)^-1"})
        assert resp.status_code == 200
        body = resp.json()
        assert body["text"] == (
            "[k=3: A(3,1)^-1 A(3,2)^-1 A(3,1) A(3,2) A(3,1)] [k=2: ] [k=1: ] | coset: id"
        )
        assert body["syllables"] == [
            {"level": 3, "word": "A(3,1)^-1 A(3,2)^-1 A(3,1) A(3,2) A(3,1)"},
            {"level": 2, "word": ""},
            {"level": 1, "word": ""},
        ]
        assert body["coset"] == "id"
        assert body["trivial"] is False
        assert body["word"] == "H2^-1 H1^-2 H2^-2 H1^2 H2^2 H1^2 H2"

    def test_syllable_cap_maps_to_422_with_blowup_fields(self, client):
        resp = client.post(
            "/nf", json={"params": P210, "word": HARD_WORD, "max_syllable": 3}
        )
        assert resp.status_code == 422
        err = resp.json()["error"]
        assert err["type"] == "BlowupError"
        assert err["reason"] == "length"
        assert err["cap"] == 3
        assert err["level"] == 2
        assert err["size"] > 3

    def test_work_budget_maps_to_422(self, client):
        resp = client.post("/nf", json={"params": P210, "word": HARD_WORD, "max_ops": 10})
        assert resp.status_code == 422
        assert resp.json()["error"]["reason"] == "work"


class TestWordProblem:
    def test_cancelling_pair_is_trivial(self, client):
        body = client.post(
            "/trivial", json={"params": P311, "word": "A(2,1) A(2,1)^-1"}
        ).json()
        assert body == {"trivial": True}

    def test_single_band_is_not(self, client):
        body = client.post("/trivial", json={"params": P311, "word": "A(2,1)"}).json()
        assert body == {"trivial": False}


class TestWordRoutes:
    def test_perm_reports_cycles_and_images(self, client):
        body = client.post("/perm", json={"params": P311, "word": "H1 H2"}).json()
        assert body == {"cycles": "(1 2 3)", "images": [2, 3, 1], "identity": False}

    def test_expand_rewrites_band_over_swaps(self, client):
        body = client.post("/expand", json={"params": P311, "word": "A(2,1)"}).json()
        assert body["word"] == "H1^2"

    def test_rewrite_inverts_expand_with_certification(self, client):
        body = client.post(
            "/rewrite", json={"params": P311, "word": "H1^2", "certify": True}
        ).json()
        assert body["word"] == "A(2,1)"

    def test_push_keeps_top_level_letters(self, client):
        body = client.post("/push", json={"params": P311, "word": "A(3,1) B(3,1)"}).json()
        assert body["word"] == "A(3,1) B(3,1)"
        assert body["params"]["n"] == 3

    def test_forget_drops_a_marked_point_in_response_params(self, client):
        body = client.post("/forget", json={"params": P311, "word": "A(2,1)"}).json()
        assert body["word"] == "A(2,1)"
        assert body["params"] == {"n": 2, "L": 1, "N": 1, "m": [2]}

    def test_section_adds_a_marked_point(self, client):
        body = client.post(
            "/section", json={"params": {"n": 2, "L": 1, "N": 1}, "word": "A(2,1)"}
        ).json()
        assert body["word"] == "A(2,1)"
        assert body["params"]["n"] == 3


class TestGammaAndPaths:
    def test_gamma_exponent_wraps_modulo_order(self, client):
        body = client.post("/gamma/nf", json={"params": CONES, "text": "g2^5"}).json()
        assert body == {"text": "g2^2", "identity": False}

    def test_gamma_torsion_collapses_to_identity(self, client):
        body = client.post("/gamma/nf", json={"params": CONES, "text": "g1^2"}).json()
        assert body == {"text": "e", "identity": True}

    def test_gpath_normalize_returns_continuous_form_and_total(self, client):
        body = client.post(
            "/gpath/normalize",
            json={"params": CONES, "path": "(g1; [g2*g1]s1, g2, [g1*g2^2]s2, e)"},
        ).json()
        assert body == {"continuous": "(g1*g2; [g1]s1, [g1*g2^2]s2)", "total": "g1*g2"}


class TestOracle:
    def test_reports_verdict_and_validated_convention(self, client):
        body = client.post("/oracle/trivial", json={"params": P311, "word": "A(2,1)"}).json()
        assert body["trivial"] is False
        assert body["convention"] in {"over", "under"}

    def test_empty_word_is_trivial(self, client):
        body = client.post("/oracle/trivial", json={"params": P311, "word": ""}).json()
        assert body["trivial"] is True


class TestPresent:
    def test_pure_presentation_lists_frozen_generators(self, client):
        body = client.post("/present", json={"params": P311, "group": "pure"}).json()
        assert body["group"] == "pure"
        assert body["generators"] == [
            "A(2,1)", "A(3,1)", "A(3,2)",
            "B(1,1)", "B(2,1)", "B(3,1)",
            "C(1,1)", "C(2,1)", "C(3,1)",
        ]
        assert body["relator_count"] == 26
        assert body["text"]

    def test_full_presentation_uses_mixed_generators(self, client):
        body = client.post("/present", json={"params": P311, "group": "full"}).json()
        assert body["generators"] == ["H1", "H2", "T1", "U1"]

    def test_algebra_format_brackets_the_presentation(self, client):
        body = client.post(
            "/present", json={"params": P311, "group": "full", "format": "algebra"}
        ).json()
        assert body["text"].startswith("< H1, H2, T1, U1 |")

    def test_bad_group_value_fails_request_validation(self, client):
        resp = client.post("/present", json={"params": P311, "group": "weird"})
        assert resp.status_code == 422
        assert "detail" in resp.json()


class TestVerifyRoute:
    def test_single_suite_at_fixed_params(self, client):
        body = client.post(
            "/verify", json={"params": P210, "suites": ["relators"], "count": 5}
        ).json()
        assert body["ok"] is True
        assert len(body["reports"]) == 1
        rep = body["reports"][0]
        assert rep["suite"] == "relators"
        assert rep["checked"] > 0
        assert rep["failures"] == []

    def test_grid_sweeps_parameter_tuples(self, client):
        body = client.post(
            "/verify",
            json={"grid": True, "max_n": 2, "max_L": 1, "max_N": 0, "count": 20},
        ).json()
        assert body["ok"] is True
        tuples = {(r["params"]["n"], r["params"]["L"], r["params"]["N"]) for r in body["reports"]}
        assert tuples == {(1, 1, 0), (2, 0, 0), (2, 1, 0)}

    def test_unknown_suite_name_is_rejected(self, client):
        resp = client.post(
            "/verify", json={"params": P210, "suites": ["no-such-suite"]}
        )
        assert resp.status_code == 400
        err = resp.json()["error"]
        assert err["type"] == "ValueError"
        assert "unknown suite" in err["message"]


class TestBench:
    def test_times_normal_forms_without_failing_on_blowups(self, client):
        body = client.post(
            "/bench", json={"params": P210, "count": 2, "length": 5, "seed": 1}
        ).json()
        assert body["count"] == 2
        assert body["length"] == 5
        assert body["blowups"] >= 0
        assert body["mean_ms"] >= 0.0
        assert "nf/word" in body["line"] or body["line"]


class TestErrorMapping:
    def test_parse_error_is_400_with_character_position(self, client):
        resp = client.post("/nf", json={"params": P311, "word": "A(2,1"})
        assert resp.status_code == 400
        err = resp.json()["error"]
        assert err["type"] == "ParseError"
        assert isinstance(err["position"], int)

    def test_out_of_range_letter_is_400(self, client):
        resp = client.post("/nf", json={"params": P311, "word": "A(5,1)"})
        assert resp.status_code == 400
        err = resp.json()["error"]
        assert err["type"] == "ParseError"
        assert "1 <= i < j <= n=3" in err["message"]

    def test_rewrite_rejects_permuting_words_as_bad_input(self, client):
        resp = client.post("/rewrite", json={"params": P311, "word": "H1"})
        assert resp.status_code == 400
        assert resp.json()["error"]["type"] == "NonPureError"

    def test_forget_rejects_mixed_words_as_bad_input(self, client):
        resp = client.post("/forget", json={"params": P311, "word": "H1"})
        assert resp.status_code == 400
        assert resp.json()["error"]["type"] == "AlphabetError"

    def test_bad_params_are_400(self, client):
        resp = client.post(
            "/nf", json={"params": {"n": -1, "L": 0, "N": 0}, "word": ""}
        )
        assert resp.status_code == 400
        assert resp.json()["error"]["type"] == "ParamsError"
