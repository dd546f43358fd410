"""Independent reference implementations used by the test-suite.

Nothing here calls into :mod:`cflfun.engine` or :mod:`cflfun.pumping`; the
walker and the split enumerator are written from scratch so the library can
be checked against them.
"""

from __future__ import annotations

import random
from itertools import product

from cflfun.machine import MachineSpec, build
from cflfun.strings import alphabet


class BudgetExceeded(Exception):
    pass


def dfs_outputs(spec: MachineSpec, x, oracle=None, on_query=None) -> set:
    """Depth-first walk of every path; returns outputs of accepting halts."""
    tape = ["¢", *x, "$"]
    budget = spec.bound.a * len(x) + spec.bound.b
    found = set()
    seen = set()

    def moves(state, pos, stack):
        if not stack:
            return
        for t in spec.transitions:
            if t.src != state or t.top != stack[0]:
                continue
            if t.read == "":
                yield t, pos
            elif pos < len(tape) and tape[pos] == t.read:
                yield t, pos + 1

    def walk(state, pos, stack, out, query, steps):
        key = (state, pos, stack, out, query, steps)
        if key in seen:
            return
        seen.add(key)
        if state in spec.accepting:
            found.add(out)
            return
        if state in spec.rejecting:
            return
        for t, npos in moves(state, pos, stack):
            if steps >= budget:
                raise BudgetExceeded(state)
            nstate, nquery = t.dst, query + t.query
            if spec.qstates and nstate == spec.qstates[0]:
                answer = oracle(nquery)
                nstate = spec.qstates[1] if answer else spec.qstates[2]
                if on_query:
                    on_query(nquery, answer)
                nquery = ""
            walk(nstate, npos, t.push + stack[1:], out + t.emit, nquery, steps + 1)

    walk(spec.start, 0, (spec.bottom,), "", "", 0)
    return found


def random_machine(rng: random.Random, n_states: int = 4, turing: bool = False, many_one: bool = False) -> MachineSpec:
    """A random transducer that terminates by construction.

    States carry ranks and every λ-move strictly increases the rank, so at
    most ``ranks`` λ-moves separate two reads.
    """
    sigma = alphabet("01")
    stack = alphabet("Z01")
    gamma = alphabet("01")
    qalpha = alphabet("01") if (turing or many_one) else None
    plain = [f"r{i}" for i in range(n_states)]
    rank = {s: i for i, s in enumerate(plain)}
    extra = []
    if turing:
        rank.update(ask=n_states, yes=n_states + 1, no=n_states + 1)
        extra = ["yes", "no"]
    rank.update(acc=n_states + 2, rej=n_states + 2)
    movers = plain + extra
    reads = ["0", "1", "¢", "$", ""]
    trans = [("r0", "¢", "Z", rng.choice(plain), "Z", "", "")]
    for src in movers:
        for _ in range(rng.randint(1, 4)):
            read = rng.choice(reads)
            if read == "":
                targets = [s for s in rank if rank[s] > rank[src]]
            else:
                targets = list(rank)
            dst = rng.choice(targets)
            top = rng.choice(list(stack))
            push = "".join(rng.choice(list(stack)) for _ in range(rng.randint(0, 2)))
            emit = rng.choice(["", "0", "1"])
            q = rng.choice(["", "0", "1"]) if qalpha else ""
            trans.append((src, read, top, dst, push, emit, q))
        if turing and src in plain and rng.random() < 0.7:
            # query from every stack top so the oracle is consulted often
            read = rng.choice(reads)
            for top in stack:
                trans.append((src, read, top, "ask", top, rng.choice(["", "0", "1"]), rng.choice(["0", "1"])))
        if src in extra:
            for top in stack:
                trans.append((src, rng.choice(["0", "1", "$"]), top, rng.choice(plain + ["acc"]), top, rng.choice(["", "1"]), ""))
        # make acceptance reachable often enough to be interesting
        if rng.random() < 0.5:
            trans.append((src, "$", rng.choice(list(stack)), "acc", rng.choice(["", "Z"]), rng.choice(["", "1"]), ""))
    ranks = n_states + 3
    return build(
        f"rand{rng.randrange(10**6)}",
        sigma,
        stack,
        gamma,
        trans,
        start="r0",
        bottom="Z",
        accepting=["acc"],
        rejecting=["rej"],
        bound=(ranks, 3 * ranks),
        states=list(rank),
        query_alphabet=qalpha,
        qstates=("ask", "yes", "no") if turing else None,
    )


def random_oracle(seed: int):
    """A deterministic pseudo-random language over any symbols."""
    return lambda w: random.Random(f"{seed}:{w}").random() < 0.5


def splits5(text: str):
    n = len(text)
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                for l in range(k, n + 1):
                    yield text[:i], text[i:j], text[j:k], text[k:l], text[l:]


def decomposition_exists(f, w: str, s: str, m: int, c: int, d: int, i_values=(0, 2)) -> list:
    """All ten-part splits satisfying the pumping conditions (straight loops)."""
    found = []
    memo = {}

    def f_(z):
        if z not in memo:
            memo[z] = f(z)
        return memo[z]

    for (u, v, x, y, z), (a, b, p, q, r) in product(list(splits5(w)), list(splits5(s))):
        if len(v + x + y) > m or len(v + y + b + q) < 1 or len(b + q) > c * m + d:
            continue
        if all(a + b * i + p + q * i + r in f_(u + v * i + x + y * i + z) for i in i_values):
            found.append((u, v, x, y, z, a, b, p, q, r))
    return found


def bits(max_len: int):
    for n in range(max_len + 1):
        for t in product("01", repeat=n):
            yield "".join(t)
