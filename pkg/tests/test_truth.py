import dataclasses
import itertools
import json
from fractions import Fraction

import pytest

from coherentia.truth import (
    CognitiveLoad,
    Connective,
    LogicError,
    builtin_logic,
    builtin_names,
    load_logic,
    logic_from_dict,
    logic_to_dict,
    parse_rational,
    validate_logic,
)

HALF = Fraction(1, 2)


def op(spec, name, *labels):
    idx = [spec.value(str(Fraction(x))).index for x in labels]
    return spec.truth_values[spec.connective(name)(*idx)].numeric


def test_builtins_validate():
    for name in ("classical", "kleene", "lp", "symmetric", "lukasiewicz-1", "lukasiewicz-2", "lukasiewicz-5"):
        assert validate_logic(builtin_logic(name)).ok, name


def test_missing_table_entry_is_partial():
    kl = builtin_logic("kleene")
    conj = kl.connective("&")
    table = dict(conj.table)
    del table[(1, 0)]
    broken = dataclasses.replace(
        kl,
        connectives=tuple(Connective("&", 2, table, conj.precedence) if c.name == "&" else c for c in kl.connectives),
    )
    report = validate_logic(broken)
    assert not report.ok
    assert any("partial table" in v for v in report.violations)


def test_load_out_of_range():
    kl = builtin_logic("kleene")
    bad = dataclasses.replace(kl, load=CognitiveLoad({0: Fraction(0), 1: Fraction(3, 2), 2: Fraction(1)}))
    assert any("load out of [0,1]" in v for v in validate_logic(bad).violations)


def test_kleene_tables():
    kl = builtin_logic("kleene")
    assert op(kl, "&", HALF, 0) == 0
    assert op(kl, "|", HALF, HALF) == HALF
    assert op(kl, "~", HALF) == HALF


def test_lukasiewicz_three_valued_tables():
    l3 = builtin_logic("lukasiewicz-2")
    assert op(l3, "|", HALF, HALF) == 1
    assert op(l3, "&", HALF, HALF) == 0
    assert op(l3, "->", 1, HALF) == HALF
    assert op(l3, "~", HALF) == HALF


def test_classical_tables():
    cl = builtin_logic("classical")
    assert op(cl, "->", 0, 0) == 1
    assert op(cl, "&", 1, 1) == 1
    assert op(cl, "->", 1, 0) == 0


@pytest.mark.parametrize("k", range(1, 8))
def test_lukasiewicz_involution_and_reflexive_implication(k):
    spec = builtin_logic(f"lukasiewicz-{k}")
    neg, imp = spec.connective("~"), spec.connective("->")
    top = spec.value("1").index
    for a in range(spec.size):
        assert neg(neg(a)) == a
        assert imp(a, a) == top


def test_kleene_lattice_laws():
    kl = builtin_logic("kleene")
    n, a_, o_ = kl.connective("~"), kl.connective("&"), kl.connective("|")
    vals = range(kl.size)
    for a, b, c in itertools.product(vals, repeat=3):
        assert a_(a, b) == a_(b, a) and o_(a, b) == o_(b, a)
        assert a_(a, a_(b, c)) == a_(a_(a, b), c)
        assert o_(a, o_(b, c)) == o_(o_(a, b), c)
        assert a_(a, a) == a and o_(a, a) == a
        assert n(a_(a, b)) == o_(n(a), n(b))
        assert n(o_(a, b)) == a_(n(a), n(b))


def test_kleene_family_consequence_sets():
    kl, lp, sl = (builtin_logic(x) for x in ("kleene", "lp", "symmetric"))
    assert [(set(r.from_set), set(r.to_set)) for r in kl.consequence] == [({2}, {2})]
    assert [(set(r.from_set), set(r.to_set)) for r in lp.consequence] == [({1, 2}, {1, 2})]
    assert len(sl.consequence) == 2


def test_unknown_builtin_and_bad_k():
    with pytest.raises(LogicError):
        builtin_logic("intuitionistic")
    with pytest.raises(LogicError):
        builtin_logic("lukasiewicz-0")
    assert "symmetric" in builtin_names()


@pytest.mark.parametrize(
    "raw, expected",
    [("3/10", Fraction(3, 10)), ("0.3", Fraction(3, 10)), (0.1, Fraction(1, 10)), (2, Fraction(2)), ("1", Fraction(1))],
)
def test_parse_rational(raw, expected):
    assert parse_rational(raw) == expected


@pytest.mark.parametrize("raw", ["abc", "1/0", None, True])
def test_parse_rational_rejects(raw):
    with pytest.raises(LogicError):
        parse_rational(raw)


def test_dict_round_trip():
    for name in ("classical", "lp", "lukasiewicz-3"):
        spec = builtin_logic(name)
        again = logic_from_dict(json.loads(json.dumps(logic_to_dict(spec))))
        assert logic_to_dict(again) == logic_to_dict(spec)


def test_load_symmetric_by_name():
    assert load_logic("symmetric").name == "symmetric"


def test_custom_load_file(tmp_path):
    data = logic_to_dict(builtin_logic("kleene"))
    data["name"] = "kleene-optimist"
    data["truth_values"][1]["load"] = "1"
    path = tmp_path / "optimist.json"
    path.write_text(json.dumps(data))
    spec = load_logic(str(path))
    assert spec.name == "kleene-optimist"
    assert spec.loads() == (0, 1, 1)


def test_unknown_connective_in_context_is_named(tmp_path):
    data = logic_to_dict(builtin_logic("kleene"))
    data["equivalence_contexts"] = ["_", "_ # _"]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    with pytest.raises(LogicError, match="'#'"):
        load_logic(str(path))


def test_path_shadows_builtin_name(tmp_path, monkeypatch):
    data = logic_to_dict(builtin_logic("classical"))
    data["name"] = "shadow"
    (tmp_path / "kleene").write_text(json.dumps(data))
    monkeypatch.chdir(tmp_path)
    assert load_logic("kleene").name == "shadow"


def test_malformed_file_reports_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"name": "x",\n "truth_values": [}')
    with pytest.raises(LogicError, match=r"broken\.json:2:"):
        load_logic(str(path))
