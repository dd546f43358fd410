"""Catalog of concrete machines paired with brute-force reference definitions.

Every machine here is shipped as a text file under ``machines/``; see
:func:`write_corpus`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable

from .algebra import FunctionHandle, advice_membership, brute, compose, from_machine, quasi_char_fn, char_fn
from .machine import LinearBound, MachineSpec, build, save_machine
from .optimization import OptMode, extremum, opt_refinement
from .oracle import build_level, is_palindrome
from .strings import NATURAL, PAD, Alphabet, Word, alphabet, render, track_alphabet, track_symbol

BITS = "01"
Z = "Z"

SIGMA = alphabet(BITS)
SIGMA_SHARP = alphabet("01#", reserved="#")
SIGMA_NAT = alphabet("01♮", reserved="♮")
SIGMA_G = alphabet("01♮#", reserved="♮#")
STACK = alphabet("Z01")

# DUP_# uses # as its separator, so its tracks are padded with a different symbol.
SHARP_TRACK_PAD = "_"


# --- machines ----------------------------------------------------------------

@lru_cache(maxsize=None)
def pal_sub() -> MachineSpec:
    """All palindromic substrings of the input."""
    t = [("s0", "¢", Z, "skip", Z, "")]
    for a in BITS:
        t += [("skip", a, Z, "skip", Z, ""), ("tail", a, Z, "tail", Z, ""), ("pop", a, a, "pop", "", a)]
    t.append(("skip", "", Z, "push", Z, ""))
    for top in STACK:
        t.append(("push", "", top, "pop", top, ""))
        for a in BITS:
            t.append(("push", a, top, "push", a + top, a))
            t.append(("push", a, top, "pop", top, a))  # odd middle symbol
    t += [("pop", "", Z, "tail", Z, ""), ("tail", "$", Z, "acc", Z, "")]
    return build("pal_sub", SIGMA, STACK, SIGMA, t, "s0", Z, ["acc"], bound=(1, 5))


def _palindrome_branch(prefix: str, emit: str) -> list:
    push, pop = prefix + "push", prefix + "pop"
    t = []
    for top in "Z01":
        t.append((push, "", top, pop, top, ""))
        for a in BITS:
            t.append((push, a, top, push, a + top, ""))
            t.append((push, a, top, pop, top, ""))
    for a in BITS:
        t.append((pop, a, a, pop, "", ""))
    t.append((pop, "$", Z, "acc", Z, emit))
    return t


@lru_cache(maxsize=None)
def eta_pal() -> MachineSpec:
    """Quasi-characteristic function of the binary palindromes."""
    t = [("s0", "¢", Z, "push", Z, "")] + _palindrome_branch("", "1")
    return build("eta_pal", SIGMA, STACK, SIGMA, t, "s0", Z, ["acc"], bound=(1, 3))


@lru_cache(maxsize=None)
def chi_pal() -> MachineSpec:
    """Characteristic function of the palindromes: a palindrome branch emits 1,
    a mismatch-guessing branch emits 0."""
    stack = alphabet("Z01X")
    t = [("s0", "¢", Z, "push", Z, ""), ("s0", "¢", Z, "np", Z, "")]
    t += _palindrome_branch("", "1")
    for a in BITS:
        for top in "ZX":
            t.append(("np", a, top, "np", "X" + top, ""))
            t.append(("np", a, top, "na" + a, top, ""))
            for b in BITS:
                t.append(("na" + a, b, top, "na" + a, top, ""))
                if b != a:
                    t.append(("na" + a, b, top, "nb", top, ""))
        t.append(("nb", a, "X", "nb", "", ""))
    t.append(("nb", "$", Z, "acc", Z, "0"))
    return build("chi_pal", SIGMA, stack, SIGMA, t, "s0", Z, ["acc"], bound=(1, 3))


@lru_cache(maxsize=None)
def eta_all() -> MachineSpec:
    t = [("s0", "¢", Z, "r", Z, ""), ("r", "$", Z, "acc", Z, "1")]
    t += [("r", a, Z, "r", Z, "") for a in BITS]
    return build("eta_all", SIGMA, alphabet("Z"), SIGMA, t, "s0", Z, ["acc"], bound=(1, 2))


@lru_cache(maxsize=None)
def reject_all() -> MachineSpec:
    t = [("s0", "¢", Z, "r", Z, "")] + [("r", a, Z, "r", Z, a) for a in BITS]
    t.append(("r", "$", Z, "rej", Z, ""))
    return build("reject_all", SIGMA, alphabet("Z"), SIGMA, t, "s0", Z, ["acc"], ["rej"], bound=(1, 2))


@lru_cache(maxsize=None)
def identity_machine() -> MachineSpec:
    t = [("s0", "¢", Z, "r", Z, ""), ("r", "$", Z, "acc", Z, "")]
    t += [("r", a, Z, "r", Z, a) for a in BITS]
    return build("identity", SIGMA, alphabet("Z"), SIGMA, t, "s0", Z, ["acc"], bound=(1, 2))


@lru_cache(maxsize=None)
def l_pal() -> MachineSpec:
    """Recognizes x#x^R (emits 1 on acceptance)."""
    t = [("s0", "¢", Z, "push", Z, "")]
    for top in "Z01":
        t.append(("push", "#", top, "pop", top, ""))
        for a in BITS:
            t.append(("push", a, top, "push", a + top, ""))
    for a in BITS:
        t.append(("pop", a, a, "pop", "", ""))
    t.append(("pop", "$", Z, "acc", Z, "1"))
    return build("l_pal", SIGMA_SHARP, STACK, SIGMA, t, "s0", Z, ["acc"], bound=(1, 2))


@lru_cache(maxsize=None)
def co_l_pal() -> MachineSpec:
    """Recognizes the complement of {x#x^R} over {0,1,#}.

    Branches: no #; two or more #; one # with |x| != |y|; one # with
    |x| = |y| and a mismatching pair x_i != y_{n+1-i}.
    """
    stack = alphabet("ZXAB")
    t = [("s0", "¢", Z, br, Z, "") for br in ("none", "many0", "len", "mis")]
    # no separator at all
    t += [("none", a, Z, "none", Z, "") for a in BITS] + [("none", "$", Z, "acc", Z, "")]
    # at least two separators
    for a in BITS:
        t += [("many0", a, Z, "many0", Z, ""), ("many1", a, Z, "many1", Z, "")]
    t += [("many0", "#", Z, "many1", Z, ""), ("many1", "#", Z, "many2", Z, "")]
    t += [("many2", a, Z, "many2", Z, "") for a in "01#"] + [("many2", "$", Z, "acc", Z, "")]
    # one separator, different lengths
    for a in BITS:
        for top in "ZX":
            t.append(("len", a, top, "len", "X" + top, ""))
        t.append(("leny", a, "X", "leny", "", ""))
        t.append(("leny", a, Z, "longy", Z, ""))
        t.append(("longy", a, Z, "longy", Z, ""))
    for top in "ZX":
        t.append(("len", "#", top, "leny", top, ""))
    t += [("leny", "$", "X", "acc", "X", ""), ("longy", "$", Z, "acc", Z, "")]
    # one separator, equal lengths, mismatch: x = p a q, y = r b s, |q|=|r|, |p|=|s|, a != b
    for a in BITS:
        for top in "ZA":
            t.append(("mis", a, top, "mis", "A" + top, ""))
            t.append(("mis", a, top, "misq" + a, top, ""))
        for top in "ZAB":
            for c in BITS:
                t.append(("misq" + a, c, top, "misq" + a, "B" + top, ""))
            t.append(("misq" + a, "#", top, "misr" + a, top, ""))
        for c in BITS:
            t.append(("misr" + a, c, "B", "misr" + a, "", ""))
            if c != a:
                for top in "ZA":
                    t.append(("misr" + a, c, top, "miss", top, ""))
        t.append(("miss", a, "A", "miss", "", ""))
    t.append(("miss", "$", Z, "acc", Z, ""))
    return build("co_l_pal", SIGMA_SHARP, stack, SIGMA, t, "s0", Z, ["acc"], bound=(1, 2))


@lru_cache(maxsize=None)
def dup_reverse() -> MachineSpec:
    """x -> x♮x^R on binary inputs, λ on inputs containing ♮."""
    t = [("s0", "¢", Z, "cp", Z, ""), ("s0", "¢", Z, "nb", Z, "")]
    for top in "Z01":
        for a in BITS:
            t.append(("cp", a, top, "cp", a + top, a))
        t.append(("cp", "$", top, "rv", top, NATURAL))
    for a in BITS:
        t.append(("rv", "", a, "rv", "", a))
        t.append(("nb", a, Z, "nb", Z, ""))
    t.append(("rv", "", Z, "acc", Z, ""))
    t.append(("nb", NATURAL, Z, "nb2", Z, ""))
    t += [("nb2", a, Z, "nb2", Z, "") for a in "01♮"] + [("nb2", "$", Z, "acc", Z, "")]
    return build("dup_reverse", SIGMA_NAT, STACK, SIGMA_NAT, t, "s0", Z, ["acc"], bound=(2, 3))


@lru_cache(maxsize=None)
def reverse_tail() -> MachineSpec:
    """u♮v -> u♮v^R when exactly one ♮ occurs, λ otherwise."""
    t = [("s0", "¢", Z, "u", Z, ""), ("s0", "¢", Z, "o0", Z, "")]
    for a in BITS:
        t.append(("u", a, Z, "u", Z, a))
        for top in "Z01":
            t.append(("v", a, top, "v", a + top, ""))
        t.append(("rv", "", a, "rv", "", a))
    t.append(("u", NATURAL, Z, "v", Z, NATURAL))
    for top in "Z01":
        t.append(("v", "$", top, "rv", top, ""))
    t.append(("rv", "", Z, "acc", Z, ""))
    # not exactly one ♮
    for a in BITS:
        t += [("o0", a, Z, "o0", Z, ""), ("o1", a, Z, "o1", Z, "")]
    t += [("o0", "$", Z, "acc", Z, ""), ("o0", NATURAL, Z, "o1", Z, ""), ("o1", NATURAL, Z, "o2", Z, "")]
    t += [("o2", a, Z, "o2", Z, "") for a in "01♮"] + [("o2", "$", Z, "acc", Z, "")]
    return build("reverse_tail", SIGMA_NAT, STACK, SIGMA_NAT, t, "s0", Z, ["acc"], bound=(2, 3))


@lru_cache(maxsize=None)
def square_substring() -> MachineSpec:
    """Turing-mode machine for {x : w = u x x v}.

    Guesses x (emitting it), reads the next block x', and asks whether the
    query x # x'^R is a member of the oracle (the language {z # z^R}).
    """
    t = [("s0", "¢", Z, "skip", Z, ""), ("skip", "", Z, "x1", Z, ""), ("x1", "", Z, "x2", Z, "", "#")]
    for a in BITS:
        t.append(("skip", a, Z, "skip", Z, ""))
        t.append(("x1", a, Z, "x1", Z, a, a))
        t.append(("rev", "", a, "rev", "", "", a))
        t.append(("yes", a, Z, "yes", Z, ""))
        for top in "Z01":
            t.append(("x2", a, top, "x2", a + top, ""))
    for top in "Z01":
        t.append(("x2", "", top, "rev", top, ""))
    t += [("rev", "", Z, "ask", Z, ""), ("yes", "$", Z, "acc", Z, "")]
    return build(
        "square_substring", SIGMA, STACK, SIGMA, t, "s0", Z, ["acc"], ["no"], bound=(2, 6),
        query_alphabet=SIGMA_SHARP, qstates=("ask", "yes", "no"),
    )


@lru_cache(maxsize=None)
def mirrored_blocks() -> MachineSpec:
    """{λ} ∪ {x_i y_i : w = x1♮x2♮x3#y1♮y2♮y3, x_i = y_i^R}."""
    t = [("s0", "¢", Z, "all", Z, "")]
    t += [("all", a, Z, "all", Z, "") for a in "01♮#"] + [("all", "$", Z, "acc", Z, "")]
    for i in (1, 2, 3):
        t.append(("s0", "¢", Z, f"g{i}x1", Z, ""))
        for j in (1, 2, 3):
            xs, ys = f"g{i}x{j}", f"g{i}y{j}"
            x_next = f"g{i}x{j + 1}" if j < 3 else f"g{i}y1"
            y_next = f"g{i}y{j + 1}" if j < 3 else "acc"
            x_sep = NATURAL if j < 3 else "#"
            y_sep = NATURAL if j < 3 else "$"
            for top in "Z01":
                t.append((xs, x_sep, top, x_next, top, ""))
                if j != i:
                    t.append((ys, y_sep, top, y_next, top, ""))
                for a in BITS:
                    if j == i:
                        t.append((xs, a, top, xs, a + top, a))
                    else:
                        t.append((xs, a, top, xs, top, ""))
                        t.append((ys, a, top, ys, top, ""))
            if j == i:
                t.append((ys, y_sep, Z, y_next, Z, ""))
                for a in BITS:
                    t.append((ys, a, a, ys, "", a))
    return build("mirrored_blocks", SIGMA_G, STACK, SIGMA, t, "s0", Z, ["acc"], bound=(1, 2))


@lru_cache(maxsize=None)
def advice_tail(sep: str = "#") -> MachineSpec:
    """Stack-free transducer x sep y -> y."""
    sigma = SIGMA_SHARP if sep == "#" else SIGMA_NAT
    t = [("s0", "¢", Z, "l", Z, ""), ("l", sep, Z, "r", Z, ""), ("r", "$", Z, "acc", Z, "")]
    for a in BITS:
        t += [("l", a, Z, "l", Z, ""), ("r", a, Z, "r", Z, a)]
    name = "advice_tail_sharp" if sep == "#" else "advice_tail_natural"
    return build(name, sigma, alphabet("Z"), SIGMA, t, "s0", Z, ["acc"], bound=(1, 2))


def track_pad_for(sep: str) -> str:
    return SHARP_TRACK_PAD if sep == PAD else PAD


@lru_cache(maxsize=None)
def track_equal(sep: str = "#") -> MachineSpec:
    """Accepts tracks ⟨x sep z, x⟩: the upper prefix before ``sep`` equals the lower string."""
    pad = track_pad_for(sep)
    upper = SIGMA_SHARP if sep == "#" else SIGMA_NAT
    sigma = track_alphabet(upper, SIGMA, pad)
    t = [("s0", "¢", Z, "eq", Z, ""), ("eq", track_symbol(sep, pad), Z, "tail", Z, ""), ("tail", "$", Z, "acc", Z, "1")]
    for a in BITS:
        t += [("eq", track_symbol(a, a), Z, "eq", Z, ""), ("tail", track_symbol(a, pad), Z, "tail", Z, "")]
    name = "track_equal_sharp" if sep == "#" else "track_equal_natural"
    return build(name, sigma, alphabet("Z"), SIGMA, t, "s0", Z, ["acc"], bound=(1, 2))


def _const_nfa(name: str, words: Iterable[str]) -> MachineSpec:
    t = [("r", a, Z, "r", Z, "") for a in BITS] + [("r", "$", Z, "acc", Z, "")]
    longest = 0
    for k, w in enumerate(words):
        longest = max(longest, len(w))
        prev = "s0"
        read = "¢"
        for j, sym in enumerate(w):
            nxt = f"w{k}_{j}" if j < len(w) - 1 else "r"
            t.append((prev, read, Z, nxt, Z, sym))
            prev, read = nxt, ""
        if not w:
            t.append(("s0", "¢", Z, "r", Z, ""))
    return build(name, SIGMA, alphabet("Z"), SIGMA, t, "s0", Z, ["acc"], bound=(1, longest + 2))


@lru_cache(maxsize=None)
def nfa_pairs() -> MachineSpec:
    """Stack-free: outputs {00, 11} on every input."""
    return _const_nfa("nfa_pairs", ["00", "11"])


@lru_cache(maxsize=None)
def nfa_uneven() -> MachineSpec:
    """Stack-free: outputs {0, 11} on every input."""
    return _const_nfa("nfa_uneven", ["0", "11"])


@lru_cache(maxsize=None)
def const01() -> MachineSpec:
    return _const_nfa("const01", ["01"])


def corpus() -> list[MachineSpec]:
    """Every machine shipped under ``machines/``."""
    return [
        pal_sub(), eta_pal(), chi_pal(), eta_all(), reject_all(), identity_machine(),
        l_pal(), co_l_pal(), dup_reverse(), reverse_tail(), square_substring(), mirrored_blocks(),
        advice_tail("#"), track_equal("#"), advice_tail(NATURAL), track_equal(NATURAL),
        nfa_pairs(), nfa_uneven(), const01(),
    ]


def write_corpus(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for spec in corpus():
        path = directory / f"{spec.name}.m"
        save_machine(spec, path)
        paths.append(path)
    return paths


# --- brute-force reference definitions ---------------------------------------

def substrings(w: str) -> set:
    return {w[i:j] for i in range(len(w) + 1) for j in range(i, len(w) + 1)}


def pal_sub_brute(w: Word) -> set:
    return {x for x in substrings(render(w)) if x == x[::-1]}


def square_substring_brute(w: Word) -> set:
    w = render(w)
    out = set()
    for i in range(len(w) + 1):
        for j in range(i, len(w) + 1):
            x = w[i:j]
            if w[j:j + len(x)] == x:
                out.add(x)
    return out


def is_binary(w: Word) -> bool:
    return all(c in "01" for c in w)


def f_dup_natural_brute(w: Word) -> set:
    w = render(w)
    return {w + NATURAL + w} if is_binary(w) else {""}


def is_dup_sep(w: Word, sep: str) -> bool:
    w = render(w)
    if w.count(sep) != 1:
        return False
    left, right = w.split(sep)
    return is_binary(left) and left == right


def is_l_pal(w: Word) -> bool:
    w = render(w)
    if w.count("#") != 1:
        return False
    left, right = w.split("#")
    return is_binary(left) and is_binary(right) and right == left[::-1]


def mirrored_block_parts(w: Word):
    """``(xs, ys)`` when ``w = x1♮x2♮x3#y1♮y2♮y3`` over binary blocks, else ``None``."""
    w = render(w)
    if w.count("#") != 1:
        return None
    left, right = w.split("#")
    xs, ys = left.split(NATURAL), right.split(NATURAL)
    if len(xs) != 3 or len(ys) != 3 or not all(is_binary(p) for p in xs + ys):
        return None
    return xs, ys


def mirrored_blocks_brute(w: Word) -> set:
    out = {""}
    parts = mirrored_block_parts(w)
    if parts:
        for x, y in zip(*parts):
            if x == y[::-1]:
                out.add(x + y)
    return out


# --- catalog -----------------------------------------------------------------

@dataclass(frozen=True)
class WitnessEntry:
    name: str
    construction: FunctionHandle
    oracle: FunctionHandle
    description: str
    test_len: int = 8
    machines: tuple = ()
    extra_inputs: Callable[[], Iterable[Word]] | None = field(default=None, compare=False)

    def inputs(self, max_len: int | None = None):
        n = self.test_len if max_len is None else max_len
        yield from self.construction.input_alphabet.words(n)


@dataclass(frozen=True)
class Verdict:
    agree: bool
    checked: int
    mismatch: Word | None = None
    construction_value: frozenset | None = None
    oracle_value: frozenset | None = None

    def __bool__(self) -> bool:
        return self.agree


def verify_entry(entry: WitnessEntry, max_len: int | None = None, inputs: Iterable[Word] | None = None) -> Verdict:
    """Exact set equality of construction and reference on every tested input."""
    if inputs is None:
        inputs = entry.inputs(max_len)
    checked = 0
    for x in inputs:
        got, want = entry.construction(x), entry.oracle(x)
        checked += 1
        if got != want:
            return Verdict(False, checked, x, got, want)
    return Verdict(True, checked)


def block_shaped_inputs(max_block: int = 2):
    """All well-formed x1♮x2♮x3#y1♮y2♮y3 with short binary blocks."""
    blocks = list(SIGMA.words(max_block))
    for xs in itertools.product(blocks, repeat=3):
        for ys in itertools.product(blocks, repeat=3):
            yield NATURAL.join(xs) + "#" + NATURAL.join(ys)


def f_dup_natural() -> FunctionHandle:
    return compose(from_machine(reverse_tail()), from_machine(dup_reverse()))


def dup_language(sep: str) -> FunctionHandle:
    """Membership in {x sep x} decided by the advice operator."""
    h = from_machine(advice_tail(sep))
    B = track_equal(sep)
    pad = track_pad_for(sep)
    sigma = SIGMA_SHARP if sep == "#" else SIGMA_NAT
    return quasi_char_fn(lambda w: advice_membership(B, h, w, pad), sigma, f"DUP_{sep}")


def square_substring_level2() -> FunctionHandle:
    return build_level(2, square_substring(), [co_l_pal()])


def catalog() -> list[WitnessEntry]:
    eta = lambda pred, sigma, name: quasi_char_fn(pred, sigma, name)  # noqa: E731
    blocks = from_machine(mirrored_blocks())
    return [
        WitnessEntry(
            "pal_sub", from_machine(pal_sub()),
            brute(pal_sub_brute, SIGMA, SIGMA, (1, 0), "PAL_sub*"),
            "palindromic substrings of the input", machines=(pal_sub(),),
        ),
        WitnessEntry(
            "eta_pal", from_machine(eta_pal()), eta(is_palindrome, SIGMA, "PAL*"),
            "quasi-characteristic function of the palindromes", machines=(eta_pal(),),
        ),
        WitnessEntry(
            "chi_pal", from_machine(chi_pal()), char_fn(is_palindrome, SIGMA, "PAL*"),
            "characteristic function of the palindromes", machines=(chi_pal(),),
        ),
        WitnessEntry(
            "eta_all", from_machine(eta_all()), eta(lambda w: True, SIGMA, "all*"),
            "quasi-characteristic function of all binary strings", machines=(eta_all(),),
        ),
        WitnessEntry(
            "dup_sharp", dup_language("#"), eta(lambda w: is_dup_sep(w, "#"), SIGMA_SHARP, "DUP_#*"),
            "{x#x} via the advice operator: h(x#y) = y and a track-equality base language",
            test_len=7, machines=(advice_tail("#"), track_equal("#")),
        ),
        WitnessEntry(
            "l_pal", from_machine(l_pal()), eta(is_l_pal, SIGMA_SHARP, "L_pal*"),
            "{x#x^R}", machines=(l_pal(),),
        ),
        WitnessEntry(
            "co_l_pal", from_machine(co_l_pal()),
            FunctionHandle(lambda w: () if is_l_pal(w) else {""}, SIGMA_SHARP, SIGMA, LinearBound(0, 1), "coL_pal*"),
            "complement of {x#x^R}; the level-2 chain machine", machines=(co_l_pal(),),
        ),
        WitnessEntry(
            "f_dup_natural", f_dup_natural(), brute(f_dup_natural_brute, SIGMA_NAT, SIGMA_NAT, (2, 1), "f_dup*"),
            "x -> x♮x as the composition of two single-valued transducers",
            test_len=7, machines=(dup_reverse(), reverse_tail()),
        ),
        WitnessEntry(
            "dup_natural", dup_language(NATURAL),
            eta(lambda w: is_dup_sep(w, NATURAL), SIGMA_NAT, "DUP_♮*"),
            "{x♮x} via the advice operator", test_len=7,
            machines=(advice_tail(NATURAL), track_equal(NATURAL)),
        ),
        WitnessEntry(
            "square_substring", square_substring_level2(),
            brute(square_substring_brute, SIGMA, SIGMA, (1, 0), "square*"),
            "{x : w = uxxv} by a Turing oracle machine over the complement of a context-free language",
            machines=(square_substring(), co_l_pal()),
        ),
        WitnessEntry(
            "mirrored_blocks", blocks, brute(mirrored_blocks_brute, SIGMA_G, SIGMA, (1, 0), "g*"),
            "{λ} ∪ {x_i y_i : w = x1♮x2♮x3#y1♮y2♮y3, x_i = y_i^R}",
            test_len=6, machines=(mirrored_blocks(),), extra_inputs=block_shaped_inputs,
        ),
        WitnessEntry(
            "mirrored_blocks_max", opt_refinement(blocks, OptMode.MAX),
            brute(lambda w: {extremum(mirrored_blocks_brute(w), SIGMA, OptMode.MAX)}, SIGMA_G, SIGMA, (1, 0), "max g*"),
            "dictionary maximum of mirrored_blocks", test_len=6, machines=(mirrored_blocks(),),
            extra_inputs=block_shaped_inputs,
        ),
    ]


def entry(name: str) -> WitnessEntry:
    for e in catalog():
        if e.name == name:
            return e
    raise KeyError(name)
