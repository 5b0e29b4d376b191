"""Smoke tests for the python bindings: a quick pass over the main operations."""

import json

import pytest

homog = pytest.importorskip("homog")


def loads(text):
    return json.loads(text)


def test_catalog_and_canonical_forms():
    c3 = homog.catalog("C3")
    k4m = homog.catalog("K4_minus")
    assert homog.canonical_form(c3) == homog.canonical_form(k4m)
    assert homog.canonical_form(c3) != homog.canonical_form(homog.catalog("K4"))


def test_dense_family_embeddings():
    h3, h4 = homog.build_h_n(3), homog.build_h_n(4)
    assert homog.find_embedding(h3, h4) is None
    assert homog.find_embedding(h4, h3) is None
    assert homog.find_embedding(h3, h3) is not None
    # relation-preserving maps do exist in the upward direction
    assert homog.find_injective_homomorphism(h3, h4) is not None


def test_refinement_splits_the_distinguished_vertex():
    classes = homog.refine_partition(homog.build_h_n(3))
    assert sorted(len(c) for c in classes) == [1, 3]


def test_parity_age_constraints():
    age = json.dumps(
        {
            "signature": [{"name": "R", "arity": 3, "symmetric": True}],
            "mode": "embedding",
            "forbidden": [loads(homog.catalog("C1")), loads(homog.catalog("C3"))],
            "oracle": None,
        }
    )
    result = loads(homog.enumerate_constraints(age, 4))
    assert result["completed_size"] == 4
    assert len(result["constraints"]) == 2
    assert not homog.is_permitted(age, homog.catalog("C1"))
    assert homog.is_permitted(age, homog.catalog("K4"))
    assert homog.classify_isolation(age, homog.catalog("C1")) == "isolated"
    amalg = loads(homog.check_amalgamation(age, "free", 4))
    assert amalg["verdict"] == "counterexample"
    assert loads(homog.check_amalgamation(age, "disjoint", 5))["verdict"] == "pass"


def test_tournament_reduct_roundtrip():
    t = homog.random_tournament(5, 7)
    r = loads(homog.tournament_reduct(t))
    assert r["size"] == 5
    counted = sum(len(v) for v in r["relations"].values())
    assert counted == 5 * 4 * 3
    assert homog.approx_n_equal(t, [0, 1, 2], [0, 1, 2])


def test_growth_and_replay():
    age = json.dumps(
        {
            "signature": [{"name": "R", "arity": 3, "symmetric": True}],
            "mode": "embedding",
            "forbidden": [loads(homog.catalog("K4"))],
            "oracle": None,
        }
    )
    grown = loads(homog.grow_generic(age, 20, 42))
    assert grown["structure"]["size"] == 20
    assert homog.is_permitted(age, json.dumps(grown["structure"]))
    replayed = loads(homog.replay_log(json.dumps(grown["log"])))
    assert replayed == grown["structure"]
    met, total, ratio = homog.extension_ratio(json.dumps(grown["log"]), 1, 0)
    assert total >= met >= 0
    assert 0.0 <= ratio <= 1.0


def test_expansion_reduct_is_binary():
    m = homog.parity_approximation(18, 3)
    out = loads(homog.build_m_p(m, [0], [1]))
    arities = [s["arity"] for s in out["minus"]["signature"]]
    assert arities and max(arities) <= 2
    assert out["structure"]["size"] == 17


def test_suite_runner():
    names = homog.suite_names()
    assert "lemma-7.1" in names and "determinism" in names
    report = loads(homog.run_suite("lemma-7.1", 1))
    assert report["status"] == "pass"
    assert all(c["criterion"] == 1 for c in report["checks"])
