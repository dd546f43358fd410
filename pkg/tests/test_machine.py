from dataclasses import replace
from pathlib import Path

import pytest

from cflfun import witnesses as W
from cflfun.errors import SpecError
from cflfun.machine import LinearBound, Transition, build, dump_machine, load_machine, parse_machine, validate_spec
from cflfun.strings import alphabet

MACHINES = Path(__file__).resolve().parent.parent / "machines"


def test_pal_sub_is_well_formed():
    assert validate_spec(W.pal_sub()).ok


def test_transition_out_of_accepting_state_is_reported():
    spec = W.eta_all()
    bad = replace(spec, transitions=spec.transitions + (Transition("acc", "", "Z", "acc", ("Z",)),))
    report = validate_spec(bad)
    assert not report.ok
    assert any("halting" in e for e in report.errors)


def test_bottom_outside_stack_alphabet_is_reported():
    report = validate_spec(replace(W.eta_all(), bottom="Q"))
    assert any("bottom" in e for e in report.errors)


def test_overlapping_halting_sets_are_reported():
    spec = W.eta_all()
    report = validate_spec(replace(spec, rejecting=spec.accepting))
    assert not report.ok


def test_turing_query_state_may_not_move():
    spec = W.square_substring()
    q = spec.qstates[0]
    bad = replace(spec, transitions=spec.transitions + (Transition(q, "", "Z", q, ("Z",)),))
    assert any("q_query" in e for e in validate_spec(bad).errors)


def test_early_acceptance_is_informational():
    spec = build("early", alphabet("01"), alphabet("Z"), alphabet("1"), [("s", "¢", "Z", "acc", "Z", "")], "s", "Z", ["acc"])
    report = validate_spec(spec)
    assert report.ok and report.info


@pytest.mark.parametrize("a,b", [(-1, 2), (0, 0)])
def test_linear_bound_rejects_bad_coefficients(a, b):
    with pytest.raises(SpecError):
        LinearBound(a, b)


def test_linear_bound_composition():
    inner, outer = LinearBound(2, 1), LinearBound(3, 4)
    for n in range(6):
        assert inner.then(outer)(n) == outer(inner(n))


@pytest.mark.parametrize("spec", W.corpus(), ids=lambda s: s.name)
def test_file_round_trip(spec):
    assert parse_machine(dump_machine(spec)) == spec


@pytest.mark.parametrize("spec", W.corpus(), ids=lambda s: s.name)
def test_shipped_files_match_constructions(spec):
    assert load_machine(MACHINES / f"{spec.name}.m") == spec


def test_comment_lines_and_hash_symbols():
    text = """
# a comment
machine tiny
input: 0 #
stack: Z
output: 1
start: s
bottom: Z
accept: acc
bound: 1 2
trans: s ¢ Z -> r Z λ
trans: r # Z -> r Z 1
trans: r $ Z -> acc Z λ
"""
    spec = parse_machine(text)
    assert "#" in spec.input_alphabet
    assert len(spec.transitions) == 3


def test_malformed_file_raises():
    with pytest.raises(SpecError):
        parse_machine("machine x\ntrans: s ¢ Z -> \n")
