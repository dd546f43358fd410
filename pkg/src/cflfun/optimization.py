"""Extremal outputs under dictionary order."""

from __future__ import annotations

import enum

from .algebra import FunctionHandle
from .engine import enumerate_outputs, is_stack_free
from .errors import PreconditionError
from .machine import MachineSpec
from .strings import Alphabet, Word, dict_key, render


class OptMode(enum.Enum):
    MAX = "max"
    MIN = "min"

    @classmethod
    def parse(cls, text) -> "OptMode":
        if isinstance(text, cls):
            return text
        aliases = {"max": cls.MAX, "maximum": cls.MAX, "min": cls.MIN, "minimum": cls.MIN}
        try:
            return aliases[str(text).lower()]
        except KeyError:
            raise PreconditionError(f"unknown opt mode {text!r}") from None


class NotStackFree(PreconditionError):
    pass


class UnequalLengths(PreconditionError):
    pass


def extremum(values, alpha: Alphabet, mode: OptMode) -> str:
    key = dict_key(alpha)
    return max(values, key=key) if OptMode.parse(mode) is OptMode.MAX else min(values, key=key)


def opt_eval(spec: MachineSpec, mode: OptMode | str, x: Word) -> str:
    outs = enumerate_outputs(spec, x)
    if not outs:
        raise PreconditionError(f"{spec.name!r} has no accepting path on {render(x)!r}")
    return extremum(outs, spec.output_alphabet, mode)


def opt_nfa_el_eval(spec: MachineSpec, mode: OptMode | str, x: Word) -> str:
    """Like :func:`opt_eval`, restricted to stack-free machines with equal-length outputs."""
    if not is_stack_free(spec):
        raise NotStackFree(f"{spec.name!r} uses its stack")
    outs = enumerate_outputs(spec, x)
    if len({len(y) for y in outs}) > 1:
        raise UnequalLengths(f"{spec.name!r} produces outputs of several lengths on {render(x)!r}")
    if not outs:
        raise PreconditionError(f"{spec.name!r} has no accepting path on {render(x)!r}")
    return extremum(outs, spec.output_alphabet, mode)


def opt_refinement(fset: FunctionHandle, mode: OptMode | str) -> FunctionHandle:
    mode = OptMode.parse(mode)

    def evaluate(x):
        outs = fset(x)
        if not outs:
            raise PreconditionError(f"{fset.name} is undefined at {render(x)!r}; opt needs a total function")
        return {extremum(outs, fset.output_alphabet, mode)}

    return FunctionHandle(
        evaluate, fset.input_alphabet, fset.output_alphabet, fset.output_bound, f"{mode.value}{{{fset.name}}}"
    )
