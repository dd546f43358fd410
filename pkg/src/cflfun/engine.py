"""Execution of pushdown transducers under the linear step budget.

The search is a layered breadth-first sweep: layer ``k`` holds every distinct
configuration reachable in exactly ``k`` steps.  Halting configurations are
collected and not expanded; stuck configurations simply drop out.  A
non-halting configuration that still has a move once the budget ``a*n+b`` is
used up is a termination violation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, Sequence

from .errors import PreconditionError, ResourceError, TerminationError
from .machine import LinearBound, MachineSpec, Transition, require_valid
from .strings import LEFT_END, RIGHT_END, Word, render

log = logging.getLogger(__name__)

DEFAULT_MAX_CONFIGS = 10_000_000


class Configuration(NamedTuple):
    state: str
    position: int  # index into ¢x$ of the next unread cell
    stack: tuple  # top first
    output: str
    query: str
    query_head: int
    steps: int


@dataclass(frozen=True)
class QueryEvent:
    """One oracle consultation of a Turing-mode run."""

    word: str
    answer: bool
    after: Configuration


@dataclass(frozen=True)
class Exploration:
    accepting: frozenset  # of (output, query) pairs
    explored: int

    @property
    def outputs(self) -> frozenset:
        return frozenset(out for out, _ in self.accepting)


@dataclass(frozen=True)
class TerminationReport:
    ok: bool
    path: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


Oracle = Callable[[str], bool]


def initial_configuration(spec: MachineSpec) -> Configuration:
    return Configuration(spec.start, 0, (spec.bottom,), "", "", 0, 0)


def _tape(spec: MachineSpec, x: Word) -> tuple:
    spec.input_alphabet.check(x)
    return (LEFT_END, *x, RIGHT_END)


def successors(
    spec: MachineSpec,
    tape: Sequence[str],
    cfg: Configuration,
    oracle: Oracle | None = None,
    observer: Callable[[QueryEvent], None] | None = None,
):
    """Yield ``(transition, next_configuration)`` for every applicable move."""
    if not cfg.stack:
        return
    top = cfg.stack[0]
    rest = cfg.stack[1:]
    delta = spec.delta
    moves: list[tuple[Transition, int]] = []
    if cfg.position < len(tape):
        for t in delta.get((cfg.state, tape[cfg.position], top), ()):
            moves.append((t, cfg.position + 1))
    for t in delta.get((cfg.state, "", top), ()):
        moves.append((t, cfg.position))
    qstates = spec.qstates
    for t, pos in moves:
        query = cfg.query + t.query
        head = cfg.query_head + (1 if t.query else 0)
        state = t.dst
        answer = None
        if qstates is not None and state == qstates[0]:
            if oracle is None:
                raise PreconditionError(f"machine {spec.name!r} entered {state!r} but no oracle was supplied")
            answer = bool(oracle(query))
            state = qstates[1] if answer else qstates[2]
            word, query, head = query, "", 0
        nxt = Configuration(state, pos, t.push + rest, cfg.output + t.emit, query, head, cfg.steps + 1)
        if answer is not None and observer is not None:
            observer(QueryEvent(word, answer, nxt))
        yield t, nxt


def _memo(oracle: Oracle | None) -> Oracle | None:
    if oracle is None:
        return None
    cache: dict = {}

    def ask(word: str) -> bool:
        if word not in cache:
            cache[word] = bool(oracle(word))
        return cache[word]

    return ask


def explore(
    spec: MachineSpec,
    x: Word,
    oracle: Oracle | None = None,
    observer: Callable[[QueryEvent], None] | None = None,
    max_configs: int = DEFAULT_MAX_CONFIGS,
) -> Exploration:
    """Run every computation path of ``spec`` on ``x``.

    Raises :class:`TerminationError` (carrying a violating path prefix) when
    some path would need more than ``a*|x|+b`` steps, and
    :class:`ResourceError` past ``max_configs`` explored configurations.
    """
    require_valid(spec)
    tape = _tape(spec, x)
    budget = spec.bound(len(x))
    ask = _memo(oracle)
    halting = spec.halting
    accepting = spec.accepting
    found = set()
    layer = {initial_configuration(spec)}
    explored = 0
    while layer:
        explored += len(layer)
        if explored > max_configs:
            raise ResourceError(f"explored more than {max_configs} configurations on {render(x)!r}")
        nxt = set()
        for cfg in layer:
            if cfg.state in halting:
                if cfg.state in accepting:
                    found.add((cfg.output, cfg.query))
                continue
            for _, succ in successors(spec, tape, cfg, ask, observer):
                if cfg.steps >= budget:
                    report = check_termination(spec, x, oracle=ask, max_configs=max_configs)
                    raise TerminationError(
                        f"machine {spec.name!r} exceeds its {spec.bound} step budget on {render(x)!r}",
                        report.path,
                    )
                nxt.add(succ)
        layer = nxt
    return Exploration(frozenset(found), explored)


def check_termination(
    spec: MachineSpec,
    x: Word,
    oracle: Oracle | None = None,
    max_configs: int = DEFAULT_MAX_CONFIGS,
) -> TerminationReport:
    """Check that every path on ``x`` halts or gets stuck within the budget.

    On failure the report carries the shortest violating path prefix, ending
    with the first configuration past the budget.
    """
    require_valid(spec)
    tape = _tape(spec, x)
    budget = spec.bound(len(x))
    halting = spec.halting
    start = initial_configuration(spec)
    parent: dict = {start: None}
    layer = [start]
    while layer:
        if len(parent) > max_configs:
            raise ResourceError(f"explored more than {max_configs} configurations on {render(x)!r}")
        nxt = []
        for cfg in layer:
            if cfg.state in halting:
                continue
            for _, succ in successors(spec, tape, cfg, oracle):
                if cfg.steps >= budget:
                    path = [succ]
                    node = cfg
                    while node is not None:
                        path.append(node)
                        node = parent[node]
                    return TerminationReport(False, tuple(reversed(path)))
                if succ not in parent:
                    parent[succ] = cfg
                    nxt.append(succ)
        layer = nxt
    return TerminationReport(True)


def lambda_step_bound(spec: MachineSpec) -> LinearBound | None:
    """A step bound valid on every input and under every oracle, or ``None``.

    When the graph of λ-moves between states is acyclic with longest path
    ``L``, a run alternates at most ``n+2`` reads with λ-runs of length at
    most ``L``, so it takes at most ``(L+1)n + 3L + 2`` steps.  A λ-move into
    ``q_query`` continues from both answer states.
    """
    edges: dict = {}
    for t in spec.transitions:
        if t.read:
            continue
        targets = spec.qstates[1:] if spec.qstates and t.dst == spec.qstates[0] else (t.dst,)
        edges.setdefault(t.src, set()).update(targets)
    depth: dict = {}
    active: set = set()

    def longest(state) -> int | None:
        if state in depth:
            return depth[state]
        if state in active:
            return None
        active.add(state)
        best = 0
        for nxt in edges.get(state, ()):
            sub = longest(nxt)
            if sub is None:
                return None
            best = max(best, sub + 1)
        active.discard(state)
        depth[state] = best
        return best

    worst = 0
    for state in spec.states:
        d = longest(state)
        if d is None:
            return None
        worst = max(worst, d)
    return LinearBound(worst + 1, 3 * worst + 2)


def certify_termination(spec: MachineSpec) -> bool:
    """Sufficient static check that the declared budget is never exceeded."""
    bound = lambda_step_bound(spec)
    return bound is not None and bound.a <= spec.bound.a and bound.b <= spec.bound.b


def enumerate_outputs(spec: MachineSpec, x: Word, max_configs: int = DEFAULT_MAX_CONFIGS) -> frozenset:
    """The set of valid outputs of ``spec`` on ``x`` (empty means undefined).

    Query tapes of many-one machines are ignored; Turing-mode machines need
    an oracle and are evaluated through :mod:`cflfun.oracle`.
    """
    return explore(spec, x, max_configs=max_configs).outputs


def accepts(spec: MachineSpec, x: Word, max_configs: int = DEFAULT_MAX_CONFIGS) -> bool:
    return bool(explore(spec, x, max_configs=max_configs).accepting)


def is_single_valued(spec: MachineSpec, inputs: Iterable[Word]):
    """Return ``(True, None)`` or ``(False, x)`` for the first ``x`` with two outputs."""
    for x in inputs:
        if len(enumerate_outputs(spec, x)) > 1:
            return False, x
    return True, None


def is_stack_free(spec: MachineSpec) -> bool:
    """True when no transition changes the stack (the machine is an nfa)."""
    return all(t.push == (t.top,) for t in spec.transitions)


def format_path(path: Iterable[Configuration]) -> str:
    lines = []
    for c in path:
        stack = "".join(c.stack) or "ε"
        lines.append(
            f"  step {c.steps}: state={c.state} pos={c.position} stack={stack} "
            f"out={c.output or '()'}" + (f" query={c.query}" if c.query else "")
        )
    return "\n".join(lines)
