"""Claim checks: frozen verdicts on the fixtures plus the agreement
property on random structures."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from gpw.core import InputError, Structure
from gpw.explore import random_structure
from gpw.harness import THEOREM_IDS, TheoremVerdict, check, check_all


def test_theorem_id_catalogue():
    assert THEOREM_IDS == (
        "Prop2", "Lemma3", "Lemma4", "Lemma5", "Lemma6", "Thm8", "Lemma9",
        "Thm10", "Lemma11", "Lemma12", "Thm13", "Prop14", "Thm16", "Lemma17",
        "Thm18", "Cor19", "Thm21", "Stmt1to2", "StmtA", "StmtB",
    )
    assert len(THEOREM_IDS) == 20


def test_unknown_theorem_id(min_sl):
    with pytest.raises(InputError):
        check(min_sl, "Thm99")


def test_fixtures_all_equivalent(min_sl, lz, rz, cz, one):
    for s in (min_sl, lz, rz, cz, one):
        for v in check_all(s):
            assert v.equivalent, (v.theorem_id, v.condition_values)
            assert v.witness is None


def test_min_semilattice_theorem8(min_sl):
    v = check(min_sl, "Thm8")
    assert v.shape == "equivalence"
    assert v.condition_values == {str(i): True for i in range(1, 8)} | {"6e": True}
    assert v.equivalent


def test_constant_zero_theorem8(cz):
    # every face fails at once, so the equivalence still holds
    v = check(cz, "Thm8")
    assert v.condition_values == {str(i): False for i in range(1, 8)} | {"6e": False}
    assert v.equivalent


def test_partition_cap_drops_exhaustive_key(min_sl):
    v = check(min_sl, "Thm8", partition_cap=1)
    assert "6e" not in v.condition_values
    assert set(v.condition_values) == {str(i) for i in range(1, 8)}
    assert v.equivalent


def test_left_zero_theorem21(lz):
    v = check(lz, "Thm21")
    want = {f"L{i}": True for i in range(1, 8)} | {"L6e": True}
    want |= {f"R{i}": False for i in range(1, 8)} | {"R6e": False}
    assert v.condition_values == want
    assert v.equivalent


def test_right_zero_theorem21(rz):
    v = check(rz, "Thm21")
    want = {f"L{i}": False for i in range(1, 8)} | {"L6e": False}
    want |= {f"R{i}": True for i in range(1, 8)} | {"R6e": True}
    assert v.condition_values == want
    assert v.equivalent


def test_right_zero_lemma4(rz):
    # pL is the identity while pI is one block: only the stated
    # refinement directions hold
    v = check(rz, "Lemma4")
    assert v.condition_values == {"L_refines_I": True, "I_refines_N": True}
    assert v.equivalent


def test_witness_on_broken_structure():
    # non-associative table: closed one-element products stop being ideals
    s = Structure(2, ("g0",), (((1, 1), (1, 0)),),
                  ((True, False), (False, True)))
    v = check(s, "Lemma6")
    assert not v.equivalent
    assert v.condition_values["sandwich_two_sided"] is True
    assert v.condition_values["left_closure_left_ideal"] is False
    assert v.witness == {"element": 0, "kind": "left"}


def test_verdict_as_dict(min_sl):
    d = check(min_sl, "Lemma4").as_dict()
    assert d == {
        "theorem": "Lemma4",
        "shape": "unconditional",
        "conditions": {"I_refines_N": True, "L_refines_I": True},
        "equivalent": True,
        "witness": None,
    }
    assert list(d["conditions"]) == sorted(d["conditions"])


def test_verdict_fields(min_sl):
    v = check(min_sl, "Prop2")
    assert isinstance(v, TheoremVerdict)
    assert v.theorem_id == "Prop2"
    assert v.shape == "implication"
    assert v.condition_values == {"intra_regular": True, "pair_closures_equal": True}


def test_check_all_order(min_sl):
    assert [v.theorem_id for v in check_all(min_sl)] == list(THEOREM_IDS)


@st.composite
def structures(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    k = draw(st.integers(min_value=1, max_value=2))
    seed = draw(st.integers(min_value=0, max_value=10_000))
    return random_structure(n, k, seed)


@settings(max_examples=25, deadline=None)
@given(structures())
def test_random_structures_all_equivalent(s):
    for v in check_all(s):
        assert v.equivalent, (v.theorem_id, v.condition_values, v.witness)
