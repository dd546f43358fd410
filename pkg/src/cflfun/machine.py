"""Machine descriptions for pushdown transducers and their text file format.

File format (one directive per line; lines starting with ``#`` are comments)::

    machine pal_sub
    input: 0 1
    stack: Z 0 1
    output: 0 1
    start: s0
    bottom: Z
    accept: acc
    reject:
    bound: 1 5
    trans: s0 ¢ Z -> skip Z λ

Query-capable machines additionally declare ``query: <symbols>`` (the query
tape alphabet), may append ``query: <symbol>`` to a ``trans:`` line, and
Turing-mode machines declare ``qstates: <q_query> <q_yes> <q_no>``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from pathlib import Path
from typing import Iterable

from .errors import SpecError
from .strings import (
    ENDMARKERS,
    LAMBDA,
    LEFT_END,
    RESERVED,
    RIGHT_END,
    Alphabet,
)


@dataclass(frozen=True)
class LinearBound:
    """The linear polynomial ``a*n + b``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise SpecError(f"bound coefficients must be nonnegative, got {self.a}, {self.b}")
        if self.a + self.b < 1:
            raise SpecError("bound a*n+b needs a + b >= 1")

    def __call__(self, n: int) -> int:
        return self.a * n + self.b

    def then(self, outer: "LinearBound") -> "LinearBound":
        """Bound of ``outer`` applied to outputs bounded by ``self``."""
        return LinearBound(outer.a * self.a, outer.a * self.b + outer.b)

    def __str__(self) -> str:
        return f"{self.a}n+{self.b}"


@dataclass(frozen=True)
class Transition:
    src: str
    read: str  # "" is a λ-move; "¢"/"$" read the endmarkers
    top: str
    dst: str
    push: tuple[str, ...]  # replaces the top symbol, leftmost becomes the new top
    emit: str = ""
    query: str = ""

    def __str__(self) -> str:
        q = f" query: {self.query}" if self.query else ""
        return (
            f"{self.src} {self.read or LAMBDA} {self.top} -> {self.dst} "
            f"{''.join(self.push) or LAMBDA} {self.emit or LAMBDA}{q}"
        )


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[str, ...] = ()
    info: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class MachineSpec:
    """A one-way nondeterministic pushdown transducer.

    With ``query_alphabet`` set the machine also writes a query tape; with
    ``qstates = (q_query, q_yes, q_no)`` it is a Turing-mode oracle machine,
    otherwise a many-one oracle machine.
    """

    name: str
    states: frozenset
    input_alphabet: Alphabet
    stack_alphabet: Alphabet
    output_alphabet: Alphabet
    transitions: tuple[Transition, ...]
    start: str
    bottom: str
    accepting: frozenset
    rejecting: frozenset
    bound: LinearBound
    query_alphabet: Alphabet | None = None
    qstates: tuple[str, str, str] | None = None

    @property
    def halting(self) -> frozenset:
        return self.accepting | self.rejecting

    @property
    def is_query_machine(self) -> bool:
        return self.query_alphabet is not None

    @property
    def is_turing(self) -> bool:
        return self.qstates is not None

    @cached_property
    def delta(self) -> dict:
        """Transitions indexed by ``(state, read, top)``."""
        table: dict = {}
        for t in self.transitions:
            table.setdefault((t.src, t.read, t.top), []).append(t)
        return {k: tuple(v) for k, v in table.items()}

    def with_(self, **changes) -> "MachineSpec":
        return replace(self, **changes)


def build(
    name: str,
    input_alphabet: Alphabet,
    stack_alphabet: Alphabet,
    output_alphabet: Alphabet,
    transitions: Iterable,
    start: str,
    bottom: str,
    accepting: Iterable[str],
    rejecting: Iterable[str] = (),
    bound: LinearBound | tuple[int, int] = (1, 1),
    states: Iterable[str] | None = None,
    query_alphabet: Alphabet | None = None,
    qstates: tuple[str, str, str] | None = None,
) -> MachineSpec:
    """Convenience constructor.

    ``transitions`` may hold :class:`Transition` objects or tuples
    ``(src, read, top, dst, push, emit[, query])`` where ``read``/``emit``/
    ``query`` use ``""`` for λ and ``push`` is a string or tuple of stack
    symbols.
    """
    trans = []
    for t in transitions:
        if not isinstance(t, Transition):
            src, read, top, dst, push, emit, *rest = t
            if isinstance(push, str):
                push = tokenize(push, stack_alphabet) if push else ()
            t = Transition(src, read, top, dst, tuple(push), emit, rest[0] if rest else "")
        trans.append(t)
    accepting = frozenset(accepting)
    rejecting = frozenset(rejecting)
    if states is None:
        found = {start} | accepting | rejecting
        for t in trans:
            found.update((t.src, t.dst))
        if qstates:
            found.update(qstates)
        states = found
    if not isinstance(bound, LinearBound):
        bound = LinearBound(*bound)
    return MachineSpec(
        name=name,
        states=frozenset(states),
        input_alphabet=input_alphabet,
        stack_alphabet=stack_alphabet,
        output_alphabet=output_alphabet,
        transitions=tuple(trans),
        start=start,
        bottom=bottom,
        accepting=accepting,
        rejecting=rejecting,
        bound=bound,
        query_alphabet=query_alphabet,
        qstates=tuple(qstates) if qstates else None,
    )


def validate_spec(spec: MachineSpec) -> ValidationReport:
    """List every violated well-formedness condition of ``spec``."""
    errors: list[str] = []
    info: list[str] = []
    Q = spec.states
    if spec.start not in Q:
        errors.append(f"start state {spec.start!r} not in Q")
    if spec.bottom not in spec.stack_alphabet:
        errors.append(f"bottom marker {spec.bottom!r} not in stack alphabet")
    both = spec.accepting & spec.rejecting
    if both:
        errors.append(f"states both accepting and rejecting: {sorted(both)}")
    for label, group in (("accepting", spec.accepting), ("rejecting", spec.rejecting)):
        extra = group - Q
        if extra:
            errors.append(f"{label} states not in Q: {sorted(extra)}")
    if not spec.output_alphabet.single_char:
        errors.append("output symbols must be single characters")
    if spec.query_alphabet is not None and not spec.query_alphabet.single_char:
        errors.append("query symbols must be single characters")

    halting = spec.halting
    for t in spec.transitions:
        where = f"transition '{t}'"
        if t.src not in Q:
            errors.append(f"{where}: source not in Q")
        if t.dst not in Q:
            errors.append(f"{where}: target not in Q")
        if t.src in halting:
            errors.append(f"{where}: leaves halting state {t.src!r}")
        if t.read and t.read not in spec.input_alphabet and t.read not in ENDMARKERS:
            errors.append(f"{where}: reads {t.read!r} outside input alphabet and endmarkers")
        if t.top not in spec.stack_alphabet:
            errors.append(f"{where}: stack top {t.top!r} not in stack alphabet")
        for s in t.push:
            if s not in spec.stack_alphabet:
                errors.append(f"{where}: pushes {s!r} not in stack alphabet")
        if t.emit and t.emit not in spec.output_alphabet:
            errors.append(f"{where}: emits {t.emit!r} outside output alphabet")
        if t.query:
            if spec.query_alphabet is None:
                errors.append(f"{where}: writes a query symbol but machine has no query tape")
            elif t.query not in spec.query_alphabet:
                errors.append(f"{where}: query symbol {t.query!r} outside query alphabet")

    if spec.qstates is not None:
        if spec.query_alphabet is None:
            errors.append("qstates declared without a query alphabet")
        if len(set(spec.qstates)) != 3:
            errors.append("q_query, q_yes, q_no must be distinct")
        for q in spec.qstates:
            if q not in Q:
                errors.append(f"query state {q!r} not in Q")
        q_query = spec.qstates[0]
        if q_query in halting:
            errors.append("q_query may not be a halting state")
        if any(t.src == q_query for t in spec.transitions):
            errors.append("q_query may not have outgoing transitions")

    if any(t.dst in spec.accepting and t.read != RIGHT_END for t in spec.transitions):
        info.append("some accepting state is entered without reading $; halting with unconsumed input is allowed")
    return ValidationReport(tuple(errors), tuple(info))


def require_valid(spec: MachineSpec) -> None:
    report = validate_spec(spec)
    if not report.ok:
        raise SpecError(f"machine {spec.name!r} is malformed: " + "; ".join(report.errors))


# --- text format -----------------------------------------------------------

def tokenize(text: str, alpha: Alphabet) -> tuple[str, ...]:
    """Split ``text`` into symbols of ``alpha`` by longest match."""
    syms = sorted(alpha.symbols, key=len, reverse=True)
    out = []
    i = 0
    while i < len(text):
        for s in syms:
            if text.startswith(s, i):
                out.append(s)
                i += len(s)
                break
        else:
            raise SpecError(f"cannot split {text!r} into symbols of {alpha!r}")
    return tuple(out)


def _lam(token: str) -> str:
    return "" if token == LAMBDA else token


def parse_machine(text: str) -> MachineSpec:
    fields: dict = {}
    trans_lines: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("machine ") or line == "machine":
            fields["name"] = line[len("machine"):].strip()
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise SpecError(f"line {lineno}: expected 'key: value', got {raw!r}")
        key = key.strip()
        toks = rest.split()
        if key == "trans":
            trans_lines.append((lineno, toks))
        elif key in fields:
            raise SpecError(f"line {lineno}: duplicate directive {key!r}")
        elif key in {"input", "stack", "output", "query", "states", "accept", "reject", "qstates", "start", "bottom", "bound"}:
            fields[key] = toks
        else:
            raise SpecError(f"line {lineno}: unknown directive {key!r}")

    for key in ("input", "stack", "output", "start", "bottom", "accept", "bound"):
        if key not in fields:
            raise SpecError(f"missing directive {key!r}")
    declared = RESERVED - ENDMARKERS
    try:
        sigma = Alphabet(fields["input"], reserved=declared)
        theta = Alphabet(fields["stack"], reserved=declared)
        gamma = Alphabet(fields["output"], reserved=declared)
        qalpha = Alphabet(fields["query"], reserved=declared) if "query" in fields else None
    except ValueError as exc:
        raise SpecError(str(exc)) from exc
    for key in ("start", "bottom"):
        if len(fields[key]) != 1:
            raise SpecError(f"{key!r} takes exactly one token")
    if len(fields["bound"]) != 2:
        raise SpecError("'bound' takes two integers a b")
    try:
        bound = LinearBound(*(int(v) for v in fields["bound"]))
    except ValueError as exc:
        raise SpecError(f"bad bound: {exc}") from exc
    qstates = None
    if "qstates" in fields:
        if len(fields["qstates"]) != 3:
            raise SpecError("'qstates' takes q_query q_yes q_no")
        qstates = tuple(fields["qstates"])

    trans = []
    for lineno, toks in trans_lines:
        query = ""
        if len(toks) == 9 and toks[7] == "query:":
            query = toks[8]
            toks = toks[:7]
        if len(toks) != 7 or toks[3] != "->":
            raise SpecError(f"line {lineno}: expected 'trans: q read top -> q2 push emit [query: s]'")
        src, read, top, _, dst, push, emit = toks
        push_syms = () if push == LAMBDA else tokenize(push, theta)
        trans.append(Transition(src, _lam(read), top, dst, push_syms, _lam(emit), query))

    return build(
        name=fields.get("name", "unnamed"),
        input_alphabet=sigma,
        stack_alphabet=theta,
        output_alphabet=gamma,
        transitions=trans,
        start=fields["start"][0],
        bottom=fields["bottom"][0],
        accepting=fields["accept"],
        rejecting=fields.get("reject", ()),
        bound=bound,
        states=fields.get("states"),
        query_alphabet=qalpha,
        qstates=qstates,
    )


def load_machine(path: str | Path) -> MachineSpec:
    return parse_machine(Path(path).read_text(encoding="utf-8"))


def _sorted_states(states) -> list[str]:
    return sorted(states)


def dump_machine(spec: MachineSpec) -> str:
    lines = [
        f"machine {spec.name}",
        "states: " + " ".join(_sorted_states(spec.states)),
        "input: " + " ".join(spec.input_alphabet),
        "stack: " + " ".join(spec.stack_alphabet),
        "output: " + " ".join(spec.output_alphabet),
    ]
    if spec.query_alphabet is not None:
        lines.append("query: " + " ".join(spec.query_alphabet))
    if spec.qstates is not None:
        lines.append("qstates: " + " ".join(spec.qstates))
    lines += [
        f"start: {spec.start}",
        f"bottom: {spec.bottom}",
        "accept: " + " ".join(_sorted_states(spec.accepting)),
        "reject: " + " ".join(_sorted_states(spec.rejecting)),
        f"bound: {spec.bound.a} {spec.bound.b}",
    ]
    lines += [f"trans: {t}" for t in spec.transitions]
    return "\n".join(lines) + "\n"


def save_machine(spec: MachineSpec, path: str | Path) -> None:
    Path(path).write_text(dump_machine(spec), encoding="utf-8")


__all__ = [
    "LinearBound",
    "Transition",
    "MachineSpec",
    "ValidationReport",
    "build",
    "validate_spec",
    "require_valid",
    "tokenize",
    "parse_machine",
    "load_machine",
    "dump_machine",
    "save_machine",
    "LEFT_END",
    "RIGHT_END",
]
