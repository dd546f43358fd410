"""Multi-valued partial functions and the operators that combine them.

A :class:`FunctionHandle` wraps any evaluator ``x -> set of outputs``; the
empty set means ``x`` is outside the domain.  Handles built from machines,
oracle machines and brute-force definitions all mix freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .engine import DEFAULT_MAX_CONFIGS, accepts, enumerate_outputs
from .errors import AlphabetMismatch, BoundViolation, PreconditionError, ResourceError
from .machine import LinearBound, MachineSpec
from .strings import (
    NATURAL,
    PAD,
    Alphabet,
    Word,
    alphabet,
    extensions_of_length,
    render,
    track_pair,
    track_symbol,
)

BITS = alphabet("01")


@dataclass(frozen=True)
class FunctionHandle:
    evaluator: Callable[[Word], Iterable[str]]
    input_alphabet: Alphabet
    output_alphabet: Alphabet
    output_bound: LinearBound
    name: str = "f"

    def __call__(self, x: Word) -> frozenset:
        self.input_alphabet.check(x)
        out = frozenset(self.evaluator(x))
        limit = self.output_bound(len(x))
        for y in out:
            if len(y) > limit:
                raise BoundViolation(
                    f"{self.name}({render(x)!r}) produced {y!r} longer than {self.output_bound}={limit}"
                )
            self.output_alphabet.check(y)
        return out

    def __repr__(self) -> str:
        return f"<FunctionHandle {self.name}>"


def from_machine(spec: MachineSpec, max_configs: int = DEFAULT_MAX_CONFIGS) -> FunctionHandle:
    """Handle computing the valid outputs of ``spec``.

    Each emitted symbol costs a step, so the step bound doubles as the
    output-length bound.
    """
    return FunctionHandle(
        lambda x: enumerate_outputs(spec, x, max_configs=max_configs),
        spec.input_alphabet,
        spec.output_alphabet,
        spec.bound,
        spec.name,
    )


def undefined(input_alphabet: Alphabet = BITS, output_alphabet: Alphabet = BITS) -> FunctionHandle:
    return FunctionHandle(lambda x: (), input_alphabet, output_alphabet, LinearBound(0, 1), "undefined")


def identity(alpha: Alphabet = BITS) -> FunctionHandle:
    return FunctionHandle(lambda x: {render(x)}, alpha, alpha, LinearBound(1, 0), "id")


def _same(a: Alphabet, b: Alphabet, what: str) -> None:
    if set(a) != set(b):
        raise AlphabetMismatch(f"{what} alphabets differ: {a!r} vs {b!r}")


def _check_pair(f: FunctionHandle, g: FunctionHandle) -> None:
    _same(f.input_alphabet, g.input_alphabet, "input")
    _same(f.output_alphabet, g.output_alphabet, "output")


def intersect(f: FunctionHandle, g: FunctionHandle) -> FunctionHandle:
    _check_pair(f, g)
    return FunctionHandle(
        lambda x: f(x) & g(x), f.input_alphabet, f.output_alphabet, f.output_bound, f"({f.name}∧{g.name})"
    )


def conjoin(*fs: FunctionHandle) -> FunctionHandle:
    """Iterated intersection ``f1 ∧ f2 ∧ ... ∧ fk``."""
    if not fs:
        raise PreconditionError("conjoin needs at least one function")
    h = fs[0]
    for f in fs[1:]:
        h = intersect(h, f)
    return h


def union(f: FunctionHandle, g: FunctionHandle) -> FunctionHandle:
    _check_pair(f, g)
    bound = LinearBound(max(f.output_bound.a, g.output_bound.a), max(f.output_bound.b, g.output_bound.b))
    return FunctionHandle(lambda x: f(x) | g(x), f.input_alphabet, f.output_alphabet, bound, f"({f.name}∨{g.name})")


def set_difference(f: FunctionHandle, g: FunctionHandle) -> FunctionHandle:
    _check_pair(f, g)
    return FunctionHandle(
        lambda x: f(x) - g(x), f.input_alphabet, f.output_alphabet, f.output_bound, f"({f.name}⊖{g.name})"
    )


def complement(
    g: FunctionHandle, p: LinearBound, n0: int = 0, max_words: int = DEFAULT_MAX_CONFIGS
) -> FunctionHandle:
    """``x -> Γ^{<=p(|x|)} - g(x)`` for ``|x| >= n0``; undefined on shorter inputs."""
    gamma = g.output_alphabet

    def evaluate(x):
        if len(x) < n0:
            return ()
        limit = p(len(x))
        if gamma.count_words(limit) > max_words:
            raise ResourceError(f"complement would enumerate more than {max_words} words at length {limit}")
        inner = g(x)
        for y in inner:
            if len(y) > limit:
                raise PreconditionError(f"{g.name}({render(x)!r}) contains {y!r}, longer than p(|x|)={limit}")
        return {y for y in gamma.words(limit) if y not in inner}

    return FunctionHandle(evaluate, g.input_alphabet, gamma, p, f"co({g.name})")


def compose(f: FunctionHandle, g: FunctionHandle) -> FunctionHandle:
    """``(f∘g)(x) = ⋃ f(y) over y in g(x)``."""
    _same(g.output_alphabet, f.input_alphabet, "middle")

    def evaluate(x):
        out = set()
        for y in g(x):
            out |= f(y)
        return out

    return FunctionHandle(
        evaluate, g.input_alphabet, f.output_alphabet, g.output_bound.then(f.output_bound), f"({f.name}∘{g.name})"
    )


@dataclass(frozen=True)
class RefinementVerdict:
    holds: bool
    counterexample: Word | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


def refinement_check(g: FunctionHandle, f: FunctionHandle, max_len: int) -> RefinementVerdict:
    """Bounded check that ``f`` refines ``g``: equal domains and ``f(x) ⊆ g(x)``."""
    _same(g.input_alphabet, f.input_alphabet, "input")
    for x in g.input_alphabet.words(max_len):
        gx, fx = g(x), f(x)
        if bool(gx) != bool(fx):
            return RefinementVerdict(False, x, "domain mismatch")
        if not fx <= gx:
            return RefinementVerdict(False, x, f"{sorted(fx - gx)} not in g(x)")
    return RefinementVerdict(True)


def domain(f: FunctionHandle, max_len: int) -> set:
    return {x for x in f.input_alphabet.words(max_len) if f(x)}


def range_(f: FunctionHandle, max_len: int) -> set:
    out = set()
    for x in f.input_alphabet.words(max_len):
        out |= f(x)
    return out


def _as_acceptor(A) -> Callable[[tuple], bool]:
    if isinstance(A, MachineSpec):
        return lambda word: accepts(A, word)
    if isinstance(A, FunctionHandle):
        return lambda word: bool(A(word))
    return A


def nivat_check(A, p: LinearBound, x: str, y: str, ext_len: int, max_pairs: int = DEFAULT_MAX_CONFIGS) -> bool:
    """Search equal-length ♮-extensions ``x~, y~`` with ``⟨x~,y~⟩`` accepted by ``A``.

    ``A`` is a machine over track symbols, a handle used as a language, or
    any predicate over tuples of track symbols.
    """
    if NATURAL in x or NATURAL in y:
        raise PreconditionError(f"{NATURAL} may not occur in the base strings")
    if ext_len < max(len(x), len(y)):
        raise PreconditionError(f"ext_len={ext_len} shorter than the strings themselves")
    if len(y) > p(len(x)):
        return False
    accept = _as_acceptor(A)
    tried = 0
    for length in range(max(len(x), len(y)), ext_len + 1):
        ys = list(extensions_of_length(y, length))
        for xt in extensions_of_length(x, length):
            for yt in ys:
                tried += 1
                if tried > max_pairs:
                    raise ResourceError(f"more than {max_pairs} extension pairs")
                if accept(tuple(track_symbol(a, b) for a, b in zip(xt, yt))):
                    return True
    return False


def advice_membership(B, h: FunctionHandle, x: Word, pad: str = PAD) -> bool:
    """Whether some advice ``y in h(x)`` puts ``⟨x,y⟩`` into the language of ``B``."""
    accept = _as_acceptor(B)
    return any(accept(track_pair(x, y, pad).rendered) for y in sorted(h(x)))


def char_fn(member: Callable[[Word], bool], alpha: Alphabet = BITS, name: str = "A") -> FunctionHandle:
    return FunctionHandle(
        lambda x: {"1" if member(x) else "0"}, alpha, BITS, LinearBound(0, 1), f"χ_{name}"
    )


def quasi_char_fn(member: Callable[[Word], bool], alpha: Alphabet = BITS, name: str = "A") -> FunctionHandle:
    return FunctionHandle(lambda x: {"1"} if member(x) else (), alpha, BITS, LinearBound(0, 1), f"η_{name}")


def brute(fn: Callable[[Word], Iterable[str]], input_alphabet, output_alphabet, bound, name: str) -> FunctionHandle:
    """Wrap a direct definition as a handle (used for reference oracles)."""
    if not isinstance(bound, LinearBound):
        bound = LinearBound(*bound)
    return FunctionHandle(fn, input_alphabet, output_alphabet, bound, name)
