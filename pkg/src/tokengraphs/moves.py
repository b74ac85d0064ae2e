"""Token paths as move sequences, with validity enforced at construction.

A move slides one token along a base edge to a free vertex.  A TokenPath
replays its moves from the start configuration when built, so any admissible
TokenPath is a simple path in the token graph by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Protocol, Sequence

from .graphs import Graph
from .tokens import Config, check_config

__all__ = [
    "TokenMove",
    "TokenPath",
    "lift_path",
    "concat",
    "distractor_wrap",
    "path_type",
    "pairwise_internally_disjoint",
    "TraceCondition",
    "CONDITION_IDS",
    "trace_condition",
    "check_trace",
]


class TokenMove(NamedTuple):
    """One token slide from src to dst along a base edge."""

    src: int
    dst: int


MoveLike = TokenMove | tuple[int, int]


def _as_moves(moves: Iterable[MoveLike]) -> tuple[TokenMove, ...]:
    return tuple(TokenMove(int(s), int(d)) for s, d in moves)


@dataclass(frozen=True)
class TokenPath:
    """A simple path in the token graph of `graph`, stored as moves.

    Construction replays every move and raises ValueError on an inadmissible
    move or a repeated configuration, so instances are always valid.
    """

    graph: Graph
    start: Config
    moves: tuple[TokenMove, ...]

    def __post_init__(self):
        object.__setattr__(self, "moves", _as_moves(self.moves))
        check_config(self.graph, self.start)
        configs = [self.start]
        occupied = set(self.start)
        seen = {self.start}
        for step, (src, dst) in enumerate(self.moves):
            if src not in occupied:
                raise ValueError(f"move {step}: no token at {src} in {tuple(sorted(occupied))}")
            if dst in occupied:
                raise ValueError(f"move {step}: target {dst} occupied in {tuple(sorted(occupied))}")
            if not self.graph.has_edge(src, dst):
                raise ValueError(f"move {step}: {src}-{dst} is not a base edge")
            occupied.remove(src)
            occupied.add(dst)
            cfg = tuple(sorted(occupied))
            if cfg in seen:
                raise ValueError(f"move {step}: configuration {cfg} repeats, path not simple")
            seen.add(cfg)
            configs.append(cfg)
        object.__setattr__(self, "_configs", tuple(configs))

    @property
    def configs(self) -> tuple[Config, ...]:
        return self._configs  # type: ignore[attr-defined]

    @property
    def end(self) -> Config:
        return self.configs[-1]

    @property
    def inner(self) -> tuple[Config, ...]:
        return self.configs[1:-1]

    @property
    def length(self) -> int:
        return len(self.moves)

    @property
    def k(self) -> int:
        return len(self.start)


def lift_path(g: Graph, route: Sequence[int], start: Config) -> TokenPath:
    """Slide one token along a base path whose only contact with start is its head.

    `route` must be a path in g with route[0] occupied, every later vertex
    free, and at least one edge.  The result visits k+ (len-1) configurations
    and has type 1.
    """
    if len(route) < 2:
        raise ValueError("route needs at least two vertices")
    if len(set(route)) != len(route):
        raise ValueError(f"route {tuple(route)} repeats a vertex")
    for u, w in zip(route, route[1:]):
        if not g.has_edge(u, w):
            raise ValueError(f"route step {u}-{w} is not a base edge")
    occupied = set(start)
    if route[0] not in occupied:
        raise ValueError(f"route head {route[0]} is not occupied in {start}")
    tail_hits = occupied.intersection(route[1:])
    if tail_hits:
        raise ValueError(f"route passes occupied vertices {sorted(tail_hits)}")
    return TokenPath(g, tuple(sorted(start)), tuple(zip(route, route[1:])))


def concat(g: Graph, segments: Sequence[Sequence[MoveLike]], start: Config) -> TokenPath:
    """Concatenate move blocks into one path from start (validity re-checked)."""
    moves: list[MoveLike] = []
    for block in segments:
        moves.extend(block)
    return TokenPath(g, tuple(sorted(start)), tuple(moves))


def distractor_wrap(g: Graph, inner: Sequence[MoveLike], u: int, v: int, start: Config) -> TokenPath:
    """Wrap a move block as u->v; inner; v->u.

    Requires edge uv, with u occupied and v free in every configuration the
    inner block visits (endpoints included).  Every configuration strictly
    inside the wrapped path then contains v and omits u, so wrapped paths
    built from a common inner family stay internally disjoint from it.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not a base edge")
    inner_moves = _as_moves(inner)
    probe = TokenPath(g, tuple(sorted(start)), inner_moves)
    for i, cfg in enumerate(probe.configs):
        if u not in cfg:
            raise ValueError(f"inner configuration {i} lost the anchor token at {u}")
        if v in cfg:
            raise ValueError(f"inner configuration {i} occupies the parking vertex {v}")
    wrapped = TokenPath(g, tuple(sorted(start)), (TokenMove(u, v),) + inner_moves + (TokenMove(v, u),))
    for cfg in wrapped.inner:
        assert v in cfg and u not in cfg
    return wrapped


def path_type(p: TokenPath) -> int:
    """Number of tokens that move at least once: k minus the always-occupied core."""
    core = set(p.start)
    for cfg in p.configs[1:]:
        core.intersection_update(cfg)
    return p.k - len(core)


def pairwise_internally_disjoint(
    paths: Sequence[TokenPath],
) -> tuple[bool, tuple[int, int] | None]:
    """Check that no configuration other than the shared endpoints repeats.

    All paths must run between the same two configurations; returns
    (True, None) or (False, (i, j)) for the first offending pair.
    """
    if not paths:
        return True, None
    x, y = paths[0].start, paths[0].end
    for p in paths[1:]:
        if p.start != x or p.end != y:
            raise ValueError(
                f"endpoint mismatch: expected {x}->{y}, got {p.start}->{p.end}"
            )
    inners = [set(p.inner) for p in paths]
    for i in range(len(paths)):
        for j in range(i + 1, len(paths)):
            if inners[i] & inners[j]:
                return False, (i, j)
    return True, None


# ---------------------------------------------------------------------------
# trace conditions
#
# Each condition constrains, for every configuration strictly inside a path,
# which shared tokens may be displaced (Z side) and which free vertices may be
# occupied (W side).  Conditions are data: a table keyed by id, with slot
# names resolved against per-path vertex bindings.


class _TraceContext(Protocol):
    z: frozenset[int]
    w_region: frozenset[int]


@dataclass(frozen=True)
class _ConditionShape:
    slots: tuple[str, ...]
    # allowed values of Z - A, as tuples of slot names; None = unconstrained
    z_drops: tuple[tuple[str, ...], ...] | None
    # allowed values of A & W-region, as tuples of slot names; None = unconstrained
    w_vals: tuple[tuple[str, ...], ...] | None
    # additionally forbid the fully undisturbed state (nothing dropped, W empty)
    forbid_trivial: bool = False


_EXCHANGE = _ConditionShape(
    slots=("z", "w"),
    z_drops=((), ("z",)),
    w_vals=((), ("w",)),
    forbid_trivial=True,
)

_SHAPES: dict[str, _ConditionShape] = {
    "C1": _ConditionShape(slots=(), z_drops=((),), w_vals=((),)),
    "C2": _ConditionShape(slots=("z",), z_drops=(("z",),), w_vals=None),
    "C2.1": _ConditionShape(slots=("w",), z_drops=None, w_vals=(("w",),)),
    "C2.2": _ConditionShape(slots=(), z_drops=None, w_vals=((),)),
    "C3": _EXCHANGE,
    "C4": _EXCHANGE,
    "C5": _ConditionShape(
        slots=("z1", "z2"),
        z_drops=(("z1",), ("z2",), ("z1", "z2")),
        w_vals=((),),
    ),
    "D1": _ConditionShape(slots=(), z_drops=((),), w_vals=((),)),
    "D2": _ConditionShape(slots=("z", "w"), z_drops=(("z",),), w_vals=(("w",),)),
    "D3": _EXCHANGE,
    "D4": _EXCHANGE,
    "D3*": _EXCHANGE,
    "D4*": _EXCHANGE,
    "E1": _ConditionShape(
        slots=("w1", "w2"),
        z_drops=((),),
        w_vals=(("w1",), ("w2",), ("w1", "w2")),
    ),
    "E2": _EXCHANGE,
    "E3": _ConditionShape(slots=("z",), z_drops=((), ("z",)), w_vals=((),)),
    "E4": _ConditionShape(slots=("w",), z_drops=((),), w_vals=((), ("w",))),
}

CONDITION_IDS: tuple[str, ...] = tuple(_SHAPES)


@dataclass(frozen=True)
class TraceCondition:
    """One named trace predicate with its slot-to-vertex bindings."""

    id: str
    bound: tuple[tuple[str, int], ...]

    def vertex(self, slot: str) -> int:
        for name, vert in self.bound:
            if name == slot:
                return vert
        raise KeyError(f"condition {self.id} binds no slot {slot!r}")


def trace_condition(cond_id: str, **bindings: int) -> TraceCondition:
    if cond_id not in _SHAPES:
        raise ValueError(f"unknown trace condition {cond_id!r}")
    shape = _SHAPES[cond_id]
    if set(bindings) != set(shape.slots):
        raise ValueError(
            f"condition {cond_id} needs slots {shape.slots}, got {tuple(sorted(bindings))}"
        )
    return TraceCondition(cond_id, tuple(sorted(bindings.items())))


def check_trace(p: TokenPath, cond: TraceCondition, ctx: _TraceContext) -> bool:
    """Evaluate cond on every configuration strictly inside p."""
    shape = _SHAPES[cond.id]
    z = ctx.z
    region = ctx.w_region
    drops_allowed = None
    if shape.z_drops is not None:
        drops_allowed = {frozenset(cond.vertex(s) for s in alt) for alt in shape.z_drops}
    w_allowed = None
    if shape.w_vals is not None:
        w_allowed = {frozenset(cond.vertex(s) for s in alt) for alt in shape.w_vals}
    for cfg in p.inner:
        occupied = set(cfg)
        dropped = frozenset(z - occupied)
        present = frozenset(occupied & region)
        if drops_allowed is not None and dropped not in drops_allowed:
            return False
        if w_allowed is not None and present not in w_allowed:
            return False
        if shape.forbid_trivial and not dropped and not present:
            return False
    return True
