"""Oracle machines: many-one and Turing relativization, and level nesting."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Sequence

from .algebra import FunctionHandle, from_machine
from .engine import DEFAULT_MAX_CONFIGS, QueryEvent, explore
from .errors import OracleError, PreconditionError, TerminationError
from .machine import MachineSpec, require_valid
from .strings import Alphabet, Word, alphabet

MAX_LEVEL = 4


@dataclass(frozen=True)
class Oracle:
    """A membership predicate.  ``alphabet=None`` accepts words over any symbols."""

    membership: Callable[[str], bool]
    alphabet: Alphabet | None = None
    name: str = "A"

    def __call__(self, word: str) -> bool:
        if self.alphabet is not None and any(s not in self.alphabet for s in word):
            return False
        return bool(self.membership(word))


def _memoized(fn: Callable[[str], bool]) -> Callable[[str], bool]:
    cache: dict = {}

    def ask(word):
        try:
            return cache[word]
        except KeyError:
            cache[word] = ans = fn(word)
            return ans

    return ask


def complement_oracle(A: Oracle) -> Oracle:
    # Complement is taken inside the alphabet; words outside it become members.
    return Oracle(lambda w: not A(w), None, f"co({A.name})")


def is_palindrome(word) -> bool:
    return tuple(word) == tuple(reversed(word))


def is_dup(word: str, sep: str = "#") -> bool:
    """Membership in ``{x sep x : x over {0,1}}``."""
    if word.count(sep) != 1:
        return False
    left, right = word.split(sep)
    return left == right and set(left) <= {"0", "1"}


BUILTIN_ORACLES = {
    "palindromes": Oracle(is_palindrome, alphabet("01"), "PAL"),
    "dup": Oracle(is_dup, alphabet("01#", reserved="#"), "DUP_#"),
    "all": Oracle(lambda w: True, None, "Σ*"),
    "none": Oracle(lambda w: False, None, "∅"),
}


def builtin_oracle(name: str) -> Oracle:
    try:
        return BUILTIN_ORACLES[name]
    except KeyError:
        raise PreconditionError(f"unknown builtin oracle {name!r}; choose from {sorted(BUILTIN_ORACLES)}") from None


def eval_many_one(spec: MachineSpec, A: Oracle, x: Word, max_configs: int = DEFAULT_MAX_CONFIGS) -> frozenset:
    """Outputs of accepting paths whose (single) query word lies in ``A``."""
    if spec.is_turing:
        raise PreconditionError(f"{spec.name!r} is a Turing-mode machine")
    run = explore(spec, x, max_configs=max_configs)
    ask = _memoized(A)
    return frozenset(out for out, query in run.accepting if ask(query))


def eval_turing(
    spec: MachineSpec,
    A: Oracle,
    x: Word,
    observer: Callable[[QueryEvent], None] | None = None,
    max_configs: int = DEFAULT_MAX_CONFIGS,
) -> frozenset:
    """Outputs of accepting paths when ``q_query`` is answered by ``A``."""
    if spec.is_query_machine and not spec.is_turing:
        raise PreconditionError(f"{spec.name!r} is a many-one machine")
    return explore(spec, x, oracle=A, observer=observer, max_configs=max_configs).outputs


def swap_yes_no(spec: MachineSpec) -> MachineSpec:
    if not spec.is_turing:
        raise PreconditionError(f"{spec.name!r} has no query states")
    q, yes, no = spec.qstates
    return replace(spec, qstates=(q, no, yes), name=spec.name + "_swapped")


def language_from_machine(spec: MachineSpec, oracle: Oracle | None = None, max_configs: int = DEFAULT_MAX_CONFIGS) -> Oracle:
    """Oracle deciding acceptance by ``spec`` (itself relativized to ``oracle`` if Turing-mode)."""
    require_valid(spec)
    if spec.is_turing and oracle is None:
        raise PreconditionError(f"{spec.name!r} needs an oracle of its own")

    def member(word: str) -> bool:
        try:
            return bool(explore(spec, word, oracle=oracle, max_configs=max_configs).accepting)
        except TerminationError as exc:
            raise OracleError(f"oracle machine {spec.name!r} failed on query {word!r}: {exc}") from exc

    return Oracle(_memoized(member), spec.input_alphabet, f"L({spec.name})")


def build_level(
    k: int, base: MachineSpec, oracle_chain: Sequence[MachineSpec] = (), max_configs: int = DEFAULT_MAX_CONFIGS
) -> FunctionHandle:
    """Level-``k`` function: ``base`` queries the complement of ``L(chain[0])``, and so on down.

    Every chain machine except the last is itself a Turing-mode machine.
    """
    if k < 1:
        raise PreconditionError("level must be at least 1")
    if k > MAX_LEVEL:
        raise PreconditionError(f"levels above {MAX_LEVEL} are not supported")
    if len(oracle_chain) != k - 1:
        raise PreconditionError(f"level {k} needs a chain of {k - 1} machines, got {len(oracle_chain)}")
    if k == 1:
        if base.is_turing:
            raise PreconditionError("a level-1 base machine cannot query an oracle")
        return from_machine(base, max_configs)
    if not base.is_turing:
        raise PreconditionError(f"base machine {base.name!r} must be Turing-mode at level {k}")
    oracle = None
    for machine in reversed(oracle_chain):
        oracle = complement_oracle(language_from_machine(machine, oracle, max_configs))
    return FunctionHandle(
        lambda x: eval_turing(base, oracle, x, max_configs=max_configs),
        base.input_alphabet,
        base.output_alphabet,
        base.bound,
        f"Σ{k}[{base.name}]",
    )


def echo_input_to_query(spec: MachineSpec) -> MachineSpec:
    """Many-one variant of ``spec`` that copies every input symbol it reads onto the query tape."""
    if spec.is_query_machine:
        raise PreconditionError(f"{spec.name!r} already has a query tape")
    sigma = spec.input_alphabet
    if not sigma.single_char:
        raise PreconditionError(f"{spec.name!r} reads multi-character symbols, which cannot be queried")
    trans = tuple(
        replace(t, query=t.read if t.read in sigma else "") for t in spec.transitions
    )
    return replace(spec, transitions=trans, query_alphabet=sigma, name=spec.name + "_echo")
