"""Functional pumping: check and search ten-part decompositions.

A decomposition splits an input ``w = u v x y z`` and one of its outputs
``s = a b p q r``.  Pumping ``i`` times must keep ``a b^i p q^i r`` among the
outputs on ``u v^i x y^i z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .algebra import FunctionHandle
from .errors import PreconditionError, ResourceError
from .strings import render

DEFAULT_I_RANGE = (0, 2)


@dataclass(frozen=True)
class PumpingParams:
    m: int
    c: int = 0
    d: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise PreconditionError("m must be positive")
        if self.c < 0 or self.d < 0:
            raise PreconditionError("c and d must be nonnegative")

    @property
    def output_window(self) -> int:
        return self.c * self.m + self.d


@dataclass(frozen=True)
class Decomposition:
    u: str
    v: str
    x: str
    y: str
    z: str
    a: str
    b: str
    p: str
    q: str
    r: str

    @property
    def w(self) -> str:
        return self.u + self.v + self.x + self.y + self.z

    @property
    def s(self) -> str:
        return self.a + self.b + self.p + self.q + self.r

    def pumped_input(self, i: int) -> str:
        return self.u + self.v * i + self.x + self.y * i + self.z

    def pumped_output(self, i: int) -> str:
        return self.a + self.b * i + self.p + self.q * i + self.r

    def __str__(self) -> str:
        parts = "u v x y z".split() + "a b p q r".split()
        vals = [self.u, self.v, self.x, self.y, self.z, self.a, self.b, self.p, self.q, self.r]
        return " ".join(f"{k}={v or '()'}" for k, v in zip(parts, vals))


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    failed: str | None = None  # "i", "ii", "iii", "iv", "v" or "i'"
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _structural(dec: Decomposition, params: PumpingParams, length_preserving: bool, relaxed: bool):
    bq = len(dec.b) + len(dec.q)
    if relaxed:
        if bq < 1:
            return CheckResult(False, "i'", "|bq| = 0")
    else:
        if len(dec.v) + len(dec.x) + len(dec.y) > params.m:
            return CheckResult(False, "i", f"|vxy| > m = {params.m}")
        if len(dec.v) + len(dec.y) + bq < 1:
            return CheckResult(False, "ii", "|vybq| = 0")
    if bq > params.output_window:
        return CheckResult(False, "iii", f"|bq| = {bq} > cm+d = {params.output_window}")
    if length_preserving and (len(dec.v) != len(dec.b) or len(dec.y) != len(dec.q)):
        return CheckResult(False, "v", "|v| != |b| or |y| != |q|")
    return None


class _Cached:
    def __init__(self, f: FunctionHandle):
        self.f = f
        self.memo: dict = {}

    def __call__(self, x):
        try:
            return self.memo[x]
        except KeyError:
            self.memo[x] = out = self.f(x)
            return out


def _pumps(dec: Decomposition, f, i_range: Iterable[int]):
    for i in i_range:
        if dec.pumped_output(i) not in f(dec.pumped_input(i)):
            return CheckResult(False, "iv", f"i={i}: {dec.pumped_output(i) or '()'} not in f({dec.pumped_input(i) or '()'})")
    return None


def check_decomposition(
    f: FunctionHandle,
    w: str,
    s: str,
    dec: Decomposition,
    params: PumpingParams,
    i_range: Iterable[int] = DEFAULT_I_RANGE,
    length_preserving: bool = False,
    relaxed: bool = False,
) -> CheckResult:
    """Check conditions (i)-(iv), plus (v) when ``length_preserving``.

    With ``relaxed`` the size condition ``|vxy| <= m`` and ``|vybq| >= 1``
    are replaced by ``|bq| >= 1``.
    """
    if dec.w != w or dec.s != s:
        raise PreconditionError("decomposition does not reassemble w and s")
    if s not in f(w):
        raise PreconditionError(f"{s!r} is not an output of {f.name} on {w!r}")
    # failures are falsy, so test against None rather than chaining with `or`
    failure = _structural(dec, params, length_preserving, relaxed)
    if failure is None:
        failure = _pumps(dec, f, i_range)
    return CheckResult(True) if failure is None else failure


def _splits(text: str, max_middle: int | None = None) -> Iterator[tuple[str, str, str, str, str]]:
    """All 5-part splits of ``text``; ``max_middle`` bounds the length of parts 2-4."""
    n = len(text)
    for i1, i2, i3, i4 in combinations_with_replacement(range(n + 1), 4):
        if max_middle is not None and i4 - i1 > max_middle:
            continue
        yield text[:i1], text[i1:i2], text[i2:i3], text[i3:i4], text[i4:]


def search_decomposition(
    f: FunctionHandle,
    w: str,
    s: str,
    params: PumpingParams,
    i_max: int = 2,
    length_preserving: bool = False,
    relaxed: bool = False,
    max_candidates: int = 5_000_000,
) -> Decomposition | None:
    """First decomposition passing every check for ``i = 0..i_max``, or ``None``.

    Splits are tried in a fixed order, so the result is deterministic.
    """
    if len(w) < params.m:
        raise PreconditionError(f"|w| = {len(w)} is below m = {params.m}")
    cached = _Cached(f)
    if s not in cached(w):
        raise PreconditionError(f"{s!r} is not an output of {f.name} on {w!r}")
    i_range = [i for i in range(i_max + 1) if i != 1]
    window = params.output_window
    out_splits = [sp for sp in _splits(s) if len(sp[1]) + len(sp[3]) <= window]
    in_splits = list(_splits(w, None if relaxed else params.m))
    if len(in_splits) * len(out_splits) > max_candidates:
        raise ResourceError(f"{len(in_splits) * len(out_splits)} candidate decompositions exceed the cap")
    for ins in in_splits:
        for outs in out_splits:
            dec = Decomposition(*ins, *outs)
            if _structural(dec, params, length_preserving, relaxed) is None and _pumps(dec, cached, i_range) is None:
                return dec
    return None


@dataclass(frozen=True)
class PumpRow:
    w: str
    s: str
    decomposition: Decomposition | None


@dataclass(frozen=True)
class PumpingReport:
    params: PumpingParams
    i_max: int
    rows: tuple[PumpRow, ...]

    @property
    def all_found(self) -> bool:
        return all(r.decomposition is not None for r in self.rows)

    @property
    def all_failed(self) -> bool:
        return all(r.decomposition is None for r in self.rows)

    def render(self) -> str:
        p = self.params
        lines = [f"# pumping with m={p.m} c={p.c} d={p.d}, i in 0..{self.i_max}"]
        for r in self.rows:
            verdict = str(r.decomposition) if r.decomposition else "NONE (exhaustive)"
            lines.append(f"{r.w or '()'}\t{r.s or '()'}\t{verdict}")
        lines.append(
            f"# a NONE verdict only means no decomposition exists at these constants (m={p.m}, c={p.c}, d={p.d}); "
            "it does not refute pumping for other constants"
        )
        return "\n".join(lines)


def pumping_report(
    f: FunctionHandle,
    params: PumpingParams,
    w_list: Sequence[str],
    i_max: int = 2,
    length_preserving: bool = False,
    relaxed: bool = False,
) -> PumpingReport:
    rows = []
    for w in w_list:
        outs = f(w)
        if not outs:
            raise PreconditionError(f"{f.name} is undefined at {render(w)!r}")
        for s in sorted(outs, key=lambda y: (len(y), y)):
            dec = search_decomposition(f, w, s, params, i_max, length_preserving, relaxed)
            rows.append(PumpRow(w, s, dec))
    return PumpingReport(params, i_max, tuple(rows))
