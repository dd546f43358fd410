from itertools import product

import pytest
from hypothesis import given, strategies as st

from cflfun.errors import InputError
from cflfun.strings import (
    NATURAL,
    PAD,
    Alphabet,
    alphabet,
    dict_compare,
    natural_extensions,
    project_naturals,
    split_track_symbol,
    track_pair,
    untrack,
)

ABCE = alphabet("abce")
BITS = alphabet("01")
words = st.text(alphabet="01", max_size=8)


@pytest.mark.parametrize(
    "x,y,expected",
    [("abbe", "abc", -1), ("ab", "aba", -1), ("abc", "abbe", 1), ("", "a", -1), ("ab", "ab", 0)],
)
def test_dict_compare_examples(x, y, expected):
    assert dict_compare(x, y, ABCE) == expected


def test_dict_compare_equal_bits():
    assert dict_compare("11", "11", BITS) == 0


def test_dict_compare_is_not_shortlex():
    assert dict_compare("011", "1", BITS) == -1


def test_dict_compare_uses_listing_order():
    assert dict_compare("0", "1", alphabet("10")) == 1


def test_dict_compare_rejects_foreign_symbol():
    with pytest.raises(InputError):
        dict_compare("02", "0", BITS)


@given(words, words)
def test_dict_compare_antisymmetric(x, y):
    assert dict_compare(x, y, BITS) == -dict_compare(y, x, BITS)
    assert (dict_compare(x, y, BITS) == 0) == (x == y)


@given(words, words, words)
def test_dict_compare_transitive(x, y, z):
    if dict_compare(x, y, BITS) <= 0 and dict_compare(y, z, BITS) <= 0:
        assert dict_compare(x, z, BITS) <= 0


@given(words)
def test_proper_prefixes_are_smaller(x):
    for i in range(len(x)):
        assert dict_compare(x[:i], x, BITS) == -1


def test_alphabet_rules():
    with pytest.raises(InputError):
        Alphabet("00")
    with pytest.raises(InputError):
        alphabet("0#")
    with pytest.raises(InputError):
        alphabet("0$")
    assert "#" in alphabet("0#", reserved="#")
    assert list(BITS.words(2)) == ["", "0", "1", "00", "01", "10", "11"]


@pytest.mark.parametrize(
    "x,y,rendered",
    [
        ("01", "01", "⟨0,0⟩⟨1,1⟩"),
        ("0", "011", "⟨0,0⟩⟨#,1⟩⟨#,1⟩"),
        ("011", "0", "⟨0,0⟩⟨1,#⟩⟨1,#⟩"),
    ],
)
def test_track_pair_examples(x, y, rendered):
    t = track_pair(x, y)
    assert str(t) == rendered
    assert len(t) == max(len(x), len(y))


def test_track_pair_rejects_pad_inside_component():
    with pytest.raises(InputError):
        track_pair("0#", "1")


@given(words, words)
def test_track_round_trip(x, y):
    t = track_pair(x, y)
    upper = "".join(split_track_symbol(s)[0] for s in t.rendered).rstrip(PAD)
    lower = "".join(split_track_symbol(s)[1] for s in t.rendered).rstrip(PAD)
    assert (upper, lower) == (x, y)
    assert untrack(t.rendered) == (x, y)


def test_natural_extension_examples():
    assert "01♮1♮01" in natural_extensions("01101", 7)
    assert natural_extensions("", 1) == {"", "♮"}
    assert natural_extensions("0", 2) == {"0", "♮0", "0♮"}
    assert natural_extensions("011", 2) == set()


def test_natural_extensions_refuse_marked_input():
    with pytest.raises(InputError):
        natural_extensions("0♮", 3)


@pytest.mark.parametrize("text,expected", [("♮0110♮♮1", "01101"), ("01", "01"), ("♮♮", "")])
def test_project_naturals(text, expected):
    assert project_naturals(text) == expected


@pytest.mark.parametrize("x", ["", "0", "10", "011"])
def test_natural_extensions_exhaustive(x):
    limit = 8
    brute = {
        "".join(t)
        for n in range(limit + 1)
        for t in product("01" + NATURAL, repeat=n)
        if "".join(t).replace(NATURAL, "") == x
    }
    got = natural_extensions(x, limit)
    assert got == brute
    assert all(project_naturals(e) == x for e in got)
