"""Smoke tests: the python layer round-trips the same JSON the CLI uses."""

import json

import pytest

import factcat


def test_fixture_and_validate():
    bc2 = factcat.fixture("bc2")
    assert factcat.validate(bc2) == []
    doc = json.loads(bc2)
    assert doc["kind"] == "category"
    assert doc["objects"] == ["*"]


def test_canonical_is_idempotent():
    a2 = factcat.fixture("a2")
    assert factcat.canonical(a2) == a2


def test_checks():
    def to_one(name):
        cat = json.loads(factcat.fixture(name))
        f = {
            "kind": "functor",
            "version": 1,
            "dom": cat,
            "cod": json.loads(factcat.fixture("one")),
            "ob": {x: "*" for x in cat["objects"]},
            "mor": {m["name"]: "id_*" for m in cat["morphisms"]},
        }
        return json.dumps(f)

    assert factcat.check("gfib", to_one("bc2")) == "true"
    assert factcat.check("gfib", to_one("a2")) == "false"
    assert factcat.check("ultimate", to_one("a2")) == "yes"
    assert factcat.check("ultimate", to_one("bc2")) == "no"
    assert factcat.check("final", to_one("p4")) == "true"
    assert factcat.check("ultimate", to_one("p4")) == "no"


def test_factorize_and_fs1():
    cat = json.loads(factcat.fixture("bc2"))
    f = json.dumps({
        "kind": "functor",
        "version": 1,
        "dom": cat,
        "cod": json.loads(factcat.fixture("one")),
        "ob": {"*": "*"},
        "mor": {"g": "id_*"},
    })
    out = factcat.factorize("ultimate", f)
    assert out["status"] == "ok"
    assert factcat.validate(out["mid"]) == []
    assert factcat.check("gfib", out["right"]) == "true"
    assert factcat.fs1(f, f) is False


def test_pi1():
    out = factcat.pi1(factcat.fixture("bc3"))
    assert out["status"] == "finite"
    assert len(json.loads(out["category"])["morphisms"]) == 2  # non-identity
    assert factcat.pi1(factcat.fixture("p4"))["status"] == "infinite"


def test_poly_round_trip():
    cat = json.loads(factcat.fixture("a2"))
    f = json.dumps({
        "kind": "functor",
        "version": 1,
        "dom": cat,
        "cod": json.loads(factcat.fixture("one")),
        "ob": {"0": "*", "1": "*"},
        "mor": {"a": "id_*"},
    })
    verdict, _note = factcat.poly_detect(f)
    assert verdict == "yes"
    p = factcat.poly_of(f)
    assert factcat.validate(p) == []
    ev = factcat.poly_eval(p)
    assert factcat.validate(ev) == []


def test_constructions_and_dot():
    chain3 = factcat.fixture("chain3")
    assert factcat.validate(factcat.core(chain3)) == []
    assert factcat.validate(factcat.arrow(chain3)) == []
    assert "dir=both" in factcat.to_dot(factcat.fixture("iso"))


def test_malformed_raises():
    with pytest.raises(ValueError):
        factcat.validate("{ not json")
    with pytest.raises(ValueError):
        factcat.validate(json.dumps({"kind": "mystery", "version": 1}))
