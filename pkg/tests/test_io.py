import json
from importlib import resources

import pytest

from coendcalc import fixtures as fx
from coendcalc import io
from coendcalc.errors import FormatError, UnitIsoFailure
from coendcalc.fincat import same_category

DATA = "tests/data"


@pytest.mark.parametrize("name", sorted(fx.BUNDLED))
def test_bundled_files_match_the_constructors(name):
    assert same_category(fx.load_bundled(name), fx.category(name))


def test_category_roundtrip_through_text():
    C = fx.category("BS3")
    doc = json.loads(io.dumps(io.category_to_doc(C)))
    assert same_category(io.category_from_doc(doc), C)


def test_set_functor_roundtrip():
    C = fx.category("P3")
    F = fx.random_set_functor(C, fx.rng_for(1), 8)
    G = io.set_functor_from_doc(json.loads(io.dumps(io.set_functor_to_doc(F))))
    assert io.same_set_functor(F, G)


def test_missing_fields_are_format_errors():
    with pytest.raises(FormatError, match="missing field"):
        io.category_from_doc({"objects": []})
    with pytest.raises(FormatError):
        io.load_json(f"{DATA}/does_not_exist.json")


def test_generated_corpus_is_current(tmp_path):
    fx.write_corpus(tmp_path)
    for rel, _ in fx.corpus_documents():
        shipped = (resources.files("coendcalc") / "data" / rel).read_text()
        assert (tmp_path / rel).read_text() == shipped, rel


def test_monoidal_document():
    M = io.monoidal_from_doc(
        json.loads((resources.files("coendcalc") / "data/monoidal/Z2.json").read_text()))
    assert M.verdict() and M.ob(1, 1) == 0
    with pytest.raises(UnitIsoFailure):
        io.monoidal_from_doc(io.load_json(f"{DATA}/bad_unit_monoidal.json"))


def test_promonoidal_document():
    PM = io.promonoidal_from_doc(io.load_json(f"{DATA}/trivial_promonoidal.json"))
    assert all(w.ok for w in PM.witnesses.values())
