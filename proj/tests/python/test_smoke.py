import json
import os
from pathlib import Path

import pytest

import ontic

DATA = Path(os.environ.get("ONTIC_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


@pytest.fixture(scope="module")
def grammar():
    return ontic.Grammar.from_files(DATA / "paper.ont", DATA / "paper.lex")


def test_thief(grammar):
    r = grammar.interpret("Sheba is a thief")
    assert r["readings"] == ["(E! v1 :: human)(THIEF(v1))"]
    assert r["version"] == ontic.RECORD_VERSION


def test_disambiguation(grammar):
    assert len(grammar.interpret("Jon promoted the party")["readings"]) == 2
    r = grammar.interpret("Jon cancelled the party")
    assert len(r["readings"]) == 1
    assert "socialEvent" in r["readings"][0]
    assert any(step[0] == "party" and step[3] == "bottom" for step in r["trace"])


def test_blocked_and_attachment(grammar):
    assert grammar.interpret("Olga is a tall beautiful dancer")["readings"] == []
    assert len(grammar.interpret("Olga is a beautiful dancer", expand_attachment=True)["readings"]) == 2


def test_metonymy(grammar):
    (reading,) = grammar.interpret("The omelet wants a beer")["readings"]
    assert "EATING(v4)" in reading and "(E v5 :: human)" in reading


def test_ontology_queries(grammar):
    g = grammar.ontology
    assert g.subsumes("car", "physical")
    assert not g.subsumes("entity", "human")
    assert g.msr("human", "car") == "DRIVE(human, car)"
    assert g.msr("cat", "event") is None
    assert g.unify_pair("human", "thing") == {"case": "single", "type": "human"}
    bridge = g.unify_pair("omelet", "human", allow_bridge=True)
    assert bridge["case"] == "bridge" and bridge["relation"] == "EAT(human, food)"
    types, bridges = g.unify_sets(["politicalGroup", "socialEvent"], ["event"])
    assert types == ["socialEvent"] and bridges == []
    with pytest.raises(KeyError):
        g.subsumes("unicorn", "thing")


def test_structured_round_trip(grammar):
    line = grammar.interpret_structured("Jon bought and studied Das Kapital")
    # independent reparse with the standard library
    doc = json.loads(line)
    assert set(doc) == {"version", "sentence", "readings", "trace", "warnings"}
    assert "HASCONTENT(v2, v5)" in doc["readings"][0]
    assert all(len(step) == 5 for step in doc["trace"])
    again = ontic.parse_structured(line)
    assert again["readings"] == doc["readings"]
    assert [list(map(lambda x: list(x) if isinstance(x, list) else x, s)) for s in again["trace"]] == doc["trace"]
    with pytest.raises(ValueError):
        ontic.parse_structured("{}")


def test_errors():
    with pytest.raises(ontic.OntologyError):
        ontic.Ontology.load("type thing\ntype a < b\ntype b < a\n")
    g = ontic.Grammar("type thing\ntype human < thing\n", "pn Sheba\nnoun thief : pred THIEF(human)\n")
    assert g.tokenize("Sheba is a thief.") == ["Sheba", "is", "a", "thief"]
    assert g.parse("Sheba is a thief") == "CopulaNP(Proper(Sheba), Indef([], thief))"
    with pytest.raises(ontic.ParseError):
        g.interpret("Sheba is a zorp")
    with pytest.raises(ontic.LexiconError):
        ontic.Grammar("type thing\n", "noun cat : type cat\n")


def test_senses(grammar):
    assert grammar.senses("party") == [("noun", "type politicalGroup"), ("noun", "type socialEvent")]
