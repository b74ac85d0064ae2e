"""Constructive disjoint path families between distance-2 token configurations.

For a tree T and configurations X, Y at distance 2 in the k-token graph, this
module builds at least min-token-degree many pairwise internally disjoint
X-Y token paths.  Instances are first normalised (complementing tokens with
free vertices, swapping endpoint roles, relabelling the two moved-token
indices) so that one of two fixed construction schemes applies; constructed
paths are replayed, trace-checked, pulled back through the recorded
reductions, and re-verified.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .moves import (
    TokenMove,
    TokenPath,
    TraceCondition,
    check_trace,
    pairwise_internally_disjoint,
    trace_condition,
)
from .tokens import (
    Case1Pair,
    Case2Pair,
    Config,
    classify_distance2,
    complement_iso,
    make_config,
    min_token_degree,
    token_degree,
)

__all__ = [
    "FamilyConstructionError",
    "Case1Context",
    "Case2Context",
    "Reduction",
    "REDUCTION_KINDS",
    "PathFamily",
    "FamilyResult",
    "normalize",
    "build_case1_step1",
    "build_case1_step2",
    "build_case2_step1",
    "build_case2_step2",
    "build_family",
    "construct_disjoint_family",
]


class FamilyConstructionError(RuntimeError):
    """A constructed family violates an invariant the construction guarantees."""


REDUCTION_KINDS = ("complement", "swap_xy", "swap_indices_12", "complement_with_relabel")


@dataclass(frozen=True)
class Reduction:
    """One instance transformation applied during normalisation.

    complement              exchange tokens and free vertices (k -> n-k)
    swap_xy                 exchange the roles of X and Y
    swap_indices_12         exchange the labels of the two moved-token pairs
    complement_with_relabel complement plus the induced role relabelling
    """

    kind: str

    def __post_init__(self):
        if self.kind not in REDUCTION_KINDS:
            raise ValueError(f"unknown reduction kind {self.kind!r}")


def _neighbor_list(g: Graph, vertex: int, inside: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(g.neighbors(vertex) & inside))


@dataclass(frozen=True)
class Case1Context:
    """Normalised instance where X and Y differ in a single token x vs y.

    The shared tokens are z, the free vertices w; v is the common neighbour
    of x and y and is free.  Neighbour lists are ascending; counts a, b, c, d
    follow deg(X) = a + b + eta + 1 and deg(Y) = c + d + eta + 1.
    """

    tree: Graph
    k: int
    x_cfg: Config
    y_cfg: Config
    x: int
    y: int
    v: int
    z: frozenset[int]
    w: frozenset[int]
    w_minus_v: frozenset[int]
    wx: tuple[int, ...]
    wy: tuple[int, ...]
    zx: tuple[int, ...]
    zy: tuple[int, ...]
    zw_edges: tuple[tuple[int, int], ...]

    @property
    def w_region(self) -> frozenset[int]:
        return self.w_minus_v

    @property
    def a(self) -> int:
        return len(self.wx)

    @property
    def b(self) -> int:
        return len(self.zy)

    @property
    def c(self) -> int:
        return len(self.zx)

    @property
    def d(self) -> int:
        return len(self.wy)

    @property
    def eta(self) -> int:
        return len(self.zw_edges)

    @property
    def m_x(self) -> int:
        return min(self.a, self.c)

    @property
    def m_y(self) -> int:
        return min(self.b, self.d)

    @property
    def m(self) -> int:
        return self.m_x + self.m_y + self.eta + 1


@dataclass(frozen=True)
class Case2Context:
    """Normalised instance where X and Y differ in two tokens x_i -> y_i.

    The slide edges x1-y1 and x2-y2 are independent; cross is the unique
    further edge between {x1, y1} and {x2, y2} if one exists, oriented as
    (endpoint among x1/y1, endpoint among x2/y2).  Counts follow
    deg(X) = a1 + a2 + b1 + b2 + eta + 2 (+1 with an x-to-y cross edge).
    """

    tree: Graph
    k: int
    x_cfg: Config
    y_cfg: Config
    x1: int
    y1: int
    x2: int
    y2: int
    z: frozenset[int]
    w: frozenset[int]
    wx1: tuple[int, ...]
    wx2: tuple[int, ...]
    wy1: tuple[int, ...]
    wy2: tuple[int, ...]
    zx1: tuple[int, ...]
    zx2: tuple[int, ...]
    zy1: tuple[int, ...]
    zy2: tuple[int, ...]
    zw_edges: tuple[tuple[int, int], ...]
    cross: tuple[int, int] | None

    @property
    def w_region(self) -> frozenset[int]:
        return self.w

    @property
    def a1(self) -> int:
        return len(self.wx1)

    @property
    def a2(self) -> int:
        return len(self.wx2)

    @property
    def b1(self) -> int:
        return len(self.zy1)

    @property
    def b2(self) -> int:
        return len(self.zy2)

    @property
    def c1(self) -> int:
        return len(self.zx1)

    @property
    def c2(self) -> int:
        return len(self.zx2)

    @property
    def d1(self) -> int:
        return len(self.wy1)

    @property
    def d2(self) -> int:
        return len(self.wy2)

    @property
    def eta(self) -> int:
        return len(self.zw_edges)

    @property
    def m(self) -> int:
        return (
            min(self.a1, self.c1)
            + min(self.a2, self.c2)
            + min(self.b1, self.d1)
            + min(self.b2, self.d2)
            + self.eta
            + 2
        )

    @property
    def cross_kind(self) -> str | None:
        if self.cross is None:
            return None
        p, q = self.cross
        first = "x1" if p == self.x1 else "y1"
        second = "x2" if q == self.x2 else "y2"
        return first + second

    @property
    def case_number(self) -> int:
        return _case_index(
            self.a1 > self.c1, self.a2 > self.c2, self.b1 > self.d1, self.b2 > self.d2
        )


def _case_index(a1_gt: bool, a2_gt: bool, b1_gt: bool, b2_gt: bool) -> int:
    """Map the four strict count comparisons to the 1..16 dispatch index."""
    return 1 + 8 * (not a1_gt) + 4 * (not a2_gt) + 2 * (not b1_gt) + (not b2_gt)


# dispatch table: which reduction each non-terminal case applies
_CASE_REDUCTIONS: dict[int, str] = {
    3: "swap_indices_12",
    9: "swap_indices_12",
    10: "swap_indices_12",
    11: "swap_indices_12",
    12: "swap_indices_12",
    15: "swap_indices_12",
    5: "complement_with_relabel",
    13: "complement_with_relabel",
    14: "complement_with_relabel",
}
_TERMINAL_CASES = frozenset({2, 4, 6, 7, 8, 16})


def _case1_context(
    tree: Graph, k: int, x_cfg: Config, y_cfg: Config, x: int, y: int, v: int
) -> Case1Context:
    n = tree.n
    xs, ys = set(x_cfg), set(y_cfg)
    z = frozenset(xs & ys)
    w = frozenset(range(n)) - xs - ys
    if x not in xs - ys or y not in ys - xs:
        raise ValueError("x/y must be the moved tokens of X and Y")
    if v not in w:
        raise ValueError(f"middle vertex {v} must be free")
    if not (tree.has_edge(x, v) and tree.has_edge(v, y)):
        raise ValueError(f"{v} is not a common neighbour of {x} and {y}")
    w_minus_v = w - {v}
    zw_edges = tuple(
        sorted((u, t) if u in z else (t, u) for u, t in tree.edges
               if (u in z) != (t in z) and (u in w or t in w))
    )
    ctx = Case1Context(
        tree=tree,
        k=k,
        x_cfg=x_cfg,
        y_cfg=y_cfg,
        x=x,
        y=y,
        v=v,
        z=z,
        w=w,
        w_minus_v=w_minus_v,
        wx=_neighbor_list(tree, x, w_minus_v),
        wy=_neighbor_list(tree, y, w_minus_v),
        zx=_neighbor_list(tree, x, z),
        zy=_neighbor_list(tree, y, z),
        zw_edges=zw_edges,
    )
    if ctx.a + ctx.b + ctx.eta + 1 != token_degree(tree, x_cfg):
        raise FamilyConstructionError("case-1 degree bookkeeping failed for X")
    if ctx.c + ctx.d + ctx.eta + 1 != token_degree(tree, y_cfg):
        raise FamilyConstructionError("case-1 degree bookkeeping failed for Y")
    return ctx


def _case2_context(
    tree: Graph,
    k: int,
    x_cfg: Config,
    y_cfg: Config,
    x1: int,
    y1: int,
    x2: int,
    y2: int,
) -> Case2Context:
    n = tree.n
    xs, ys = set(x_cfg), set(y_cfg)
    if {x1, x2} != xs - ys or {y1, y2} != ys - xs:
        raise ValueError("x_i/y_i must be the moved tokens of X and Y")
    if not (tree.has_edge(x1, y1) and tree.has_edge(x2, y2)):
        raise ValueError("slide edges x1-y1 and x2-y2 must exist")
    z = frozenset(xs & ys)
    w = frozenset(range(n)) - xs - ys
    crosses = [
        (p, q)
        for p in (x1, y1)
        for q in (x2, y2)
        if tree.has_edge(p, q)
    ]
    if len(crosses) > 1:
        raise ValueError("multiple cross edges form a cycle; base graph is not a tree")
    zw_edges = tuple(
        sorted((u, t) if u in z else (t, u) for u, t in tree.edges
               if (u in z) != (t in z) and (u in w or t in w))
    )
    ctx = Case2Context(
        tree=tree,
        k=k,
        x_cfg=x_cfg,
        y_cfg=y_cfg,
        x1=x1,
        y1=y1,
        x2=x2,
        y2=y2,
        z=z,
        w=w,
        wx1=_neighbor_list(tree, x1, w),
        wx2=_neighbor_list(tree, x2, w),
        wy1=_neighbor_list(tree, y1, w),
        wy2=_neighbor_list(tree, y2, w),
        zx1=_neighbor_list(tree, x1, z),
        zx2=_neighbor_list(tree, x2, z),
        zy1=_neighbor_list(tree, y1, z),
        zy2=_neighbor_list(tree, y2, z),
        zw_edges=zw_edges,
        cross=crosses[0] if crosses else None,
    )
    bonus = 1 if ctx.cross_kind in ("x1y2", "y1x2") else 0
    if ctx.a1 + ctx.a2 + ctx.b1 + ctx.b2 + ctx.eta + 2 + bonus != token_degree(tree, x_cfg):
        raise FamilyConstructionError("case-2 degree bookkeeping failed for X")
    if ctx.c1 + ctx.c2 + ctx.d1 + ctx.d2 + ctx.eta + 2 + bonus != token_degree(tree, y_cfg):
        raise FamilyConstructionError("case-2 degree bookkeeping failed for Y")
    return ctx


def _swap_indices(ctx: Case2Context) -> Case2Context:
    return _case2_context(
        ctx.tree, ctx.k, ctx.x_cfg, ctx.y_cfg, ctx.x2, ctx.y2, ctx.x1, ctx.y1
    )


def _complement_relabel(ctx: Case2Context) -> Case2Context:
    n = ctx.tree.n
    return _case2_context(
        ctx.tree,
        n - ctx.k,
        complement_iso(ctx.x_cfg, n),
        complement_iso(ctx.y_cfg, n),
        ctx.y1,
        ctx.x1,
        ctx.y2,
        ctx.x2,
    )


def normalize(
    tree: Graph, x_cfg: Config, y_cfg: Config
) -> tuple[Case1Context | Case2Context, tuple[Reduction, ...]]:
    """Classify and normalise a distance-2 instance over a tree.

    Returns the construction-ready context together with the reductions that
    were applied, in application order.  Case-1 instances are complemented
    until the middle vertex is free, then endpoint-swapped so X has the
    smaller token degree.  Case-2 instances are endpoint-swapped the same
    way, then run through the count-comparison dispatch until a terminal
    case is reached (at most two reductions).
    """
    if not tree.is_tree():
        raise ValueError("base graph must be a tree")
    x_cfg, y_cfg = make_config(x_cfg), make_config(y_cfg)
    pair = classify_distance2(tree, x_cfg, y_cfg)
    n = tree.n
    reductions: list[Reduction] = []

    if isinstance(pair, Case1Pair):
        x, y, v = pair.x, pair.y, pair.v
        k = len(x_cfg)
        if v in x_cfg or v in y_cfg:
            x_cfg, y_cfg = complement_iso(x_cfg, n), complement_iso(y_cfg, n)
            k = n - k
            x, y = y, x
            reductions.append(Reduction("complement"))
        if token_degree(tree, x_cfg) > token_degree(tree, y_cfg):
            x_cfg, y_cfg = y_cfg, x_cfg
            x, y = y, x
            reductions.append(Reduction("swap_xy"))
        return _case1_context(tree, k, x_cfg, y_cfg, x, y, v), tuple(reductions)

    assert isinstance(pair, Case2Pair)
    x1, y1, x2, y2 = pair.x1, pair.y1, pair.x2, pair.y2
    k = len(x_cfg)
    if token_degree(tree, x_cfg) > token_degree(tree, y_cfg):
        x_cfg, y_cfg = y_cfg, x_cfg
        x1, y1, x2, y2 = y1, x1, y2, x2
        reductions.append(Reduction("swap_xy"))
    ctx = _case2_context(tree, k, x_cfg, y_cfg, x1, y1, x2, y2)
    for _ in range(2):
        case = ctx.case_number
        if case == 1:
            raise FamilyConstructionError(
                "case 1 of the dispatch contradicts deg(X) <= deg(Y)"
            )
        kind = _CASE_REDUCTIONS.get(case)
        if kind is None:
            break
        ctx = _swap_indices(ctx) if kind == "swap_indices_12" else _complement_relabel(ctx)
        reductions.append(Reduction(kind))
    if ctx.case_number not in _TERMINAL_CASES:
        raise FamilyConstructionError(
            f"dispatch failed to reach a terminal case (stuck at {ctx.case_number})"
        )
    return ctx, tuple(reductions)


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class PathFamily:
    """X-Y token paths with construction labels and trace certificates."""

    x_cfg: Config
    y_cfg: Config
    paths: tuple[TokenPath, ...]
    labels: tuple[str, ...]
    traces: tuple[tuple[TraceCondition, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)


def _build_entry(
    ctx: Case1Context | Case2Context,
    label: str,
    moves: list[tuple[int, int]],
    conds: tuple[TraceCondition, ...],
) -> tuple[str, TokenPath, tuple[TraceCondition, ...]]:
    try:
        path = TokenPath(ctx.tree, ctx.x_cfg, tuple(TokenMove(*m) for m in moves))
    except ValueError as exc:
        raise FamilyConstructionError(f"path {label} does not replay: {exc}") from exc
    if path.end != ctx.y_cfg:
        raise FamilyConstructionError(f"path {label} ends at {path.end}, not {ctx.y_cfg}")
    for cond in conds:
        if not check_trace(path, cond, ctx):
            raise FamilyConstructionError(f"path {label} violates trace condition {cond.id}")
    return label, path, conds


def _assemble(ctx, entries) -> PathFamily:
    labels = tuple(e[0] for e in entries)
    paths = tuple(e[1] for e in entries)
    traces = tuple(e[2] for e in entries)
    ok, clash = pairwise_internally_disjoint(paths)
    if not ok:
        i, j = clash
        raise FamilyConstructionError(
            f"paths {labels[i]} and {labels[j]} share an inner configuration"
        )
    return PathFamily(ctx.x_cfg, ctx.y_cfg, paths, labels, traces)


def build_case1_step1(ctx: Case1Context) -> PathFamily:
    """The guaranteed family of size m = m_x + m_y + eta + 1 for one-token pairs."""
    x, y, v = ctx.x, ctx.y, ctx.v
    entries = [
        _build_entry(ctx, "T1", [(x, v), (v, y)], (trace_condition("C1"),))
    ]
    for z_i, w_j in ctx.zw_edges:
        if w_j != v:
            moves = [(z_i, w_j), (x, v), (v, y), (w_j, z_i)]
            conds = (trace_condition("C2", z=z_i), trace_condition("C2.1", w=w_j))
        else:
            moves = [(z_i, v), (v, y), (x, v), (v, z_i)]
            conds = (trace_condition("C2", z=z_i), trace_condition("C2.2"))
        entries.append(_build_entry(ctx, "T2", moves, conds))
    for i in range(ctx.m_x):
        w_i, z_i = ctx.wx[i], ctx.zx[i]
        moves = [(x, w_i), (z_i, x), (x, v), (v, y), (w_i, x), (x, z_i)]
        entries.append(
            _build_entry(ctx, "T3", moves, (trace_condition("C3", z=z_i, w=w_i),))
        )
    for j in range(ctx.m_y):
        w_j, z_j = ctx.wy[j], ctx.zy[j]
        moves = [(z_j, y), (y, w_j), (x, v), (v, y), (y, z_j), (w_j, y)]
        entries.append(
            _build_entry(ctx, "T4", moves, (trace_condition("C4", z=z_j, w=w_j),))
        )
    family = _assemble(ctx, entries)
    if len(family) != ctx.m:
        raise FamilyConstructionError(f"step-1 family has {len(family)} paths, expected {ctx.m}")
    return family


def build_case1_step2(ctx: Case1Context, family: PathFamily, delta: int) -> PathFamily:
    """Extend the step-1 family with up to two paths when delta exceeds m."""
    extra = delta - ctx.m
    if extra <= 0:
        return family
    if extra > 2:
        raise FamilyConstructionError(f"delta - m = {extra} exceeds the case-1 bound 2")
    a, b, c, d = ctx.a, ctx.b, ctx.c, ctx.d
    if not (b >= d + 1 and c >= a + 1):
        raise FamilyConstructionError(
            f"delta > m requires b > d and c > a, got a={a} b={b} c={c} d={d}"
        )
    if extra == 2 and not (b >= d + 2 and c >= a + 2):
        raise FamilyConstructionError(
            f"delta = m + 2 requires b >= d+2 and c >= a+2, got a={a} b={b} c={c} d={d}"
        )
    x, y, v = ctx.x, ctx.y, ctx.v
    entries = list(zip(family.labels, family.paths, family.traces))
    for step, label in zip(range(extra), ("P", "P'")):
        z_b = ctx.zy[b - 1 - step]
        z_c = ctx.zx[c - 1 - step]
        moves = [(z_b, y), (x, v), (z_c, x), (y, z_b), (v, y), (x, z_c)]
        entries.append(
            _build_entry(ctx, label, moves, (trace_condition("C5", z1=z_b, z2=z_c),))
        )
    return _assemble(ctx, entries)


def build_case2_step1(ctx: Case2Context) -> PathFamily:
    """The guaranteed family of size m for two-token pairs."""
    x1, y1, x2, y2 = ctx.x1, ctx.y1, ctx.x2, ctx.y2
    d1_cond = (trace_condition("D1"),)
    entries = [
        _build_entry(ctx, "L1", [(x1, y1), (x2, y2)], d1_cond),
        _build_entry(ctx, "L1", [(x2, y2), (x1, y1)], d1_cond),
    ]
    for z_i, w_j in ctx.zw_edges:
        moves = [(z_i, w_j), (x1, y1), (x2, y2), (w_j, z_i)]
        entries.append(
            _build_entry(ctx, "L2", moves, (trace_condition("D2", z=z_i, w=w_j),))
        )
    for i in range(min(ctx.a1, ctx.c1)):
        w_i, z_i = ctx.wx1[i], ctx.zx1[i]
        moves = [(x1, w_i), (z_i, x1), (x1, y1), (x2, y2), (w_i, x1), (x1, z_i)]
        entries.append(
            _build_entry(ctx, "L3", moves, (trace_condition("D3", z=z_i, w=w_i),))
        )
    for j in range(min(ctx.b1, ctx.d1)):
        w_j, z_j = ctx.wy1[j], ctx.zy1[j]
        moves = [(z_j, y1), (y1, w_j), (x2, y2), (x1, y1), (y1, z_j), (w_j, y1)]
        entries.append(
            _build_entry(ctx, "L4", moves, (trace_condition("D4", z=z_j, w=w_j),))
        )
    for i in range(min(ctx.a2, ctx.c2)):
        w_i, z_i = ctx.wx2[i], ctx.zx2[i]
        moves = [(x2, w_i), (z_i, x2), (x2, y2), (x1, y1), (w_i, x2), (x2, z_i)]
        entries.append(
            _build_entry(ctx, "L3*", moves, (trace_condition("D3*", z=z_i, w=w_i),))
        )
    for j in range(min(ctx.b2, ctx.d2)):
        w_j, z_j = ctx.wy2[j], ctx.zy2[j]
        moves = [(z_j, y2), (y2, w_j), (x1, y1), (x2, y2), (y2, z_j), (w_j, y2)]
        entries.append(
            _build_entry(ctx, "L4*", moves, (trace_condition("D4*", z=z_j, w=w_j),))
        )
    family = _assemble(ctx, entries)
    if len(family) != ctx.m:
        raise FamilyConstructionError(f"step-1 family has {len(family)} paths, expected {ctx.m}")
    return family


def _supplemental_entry(ctx: Case2Context):
    """Pick the one extra path available when delta = m + 1."""
    x1, y1, x2, y2 = ctx.x1, ctx.y1, ctx.x2, ctx.y2
    case = ctx.case_number

    def p1():
        if not (ctx.a1 > ctx.c1 and ctx.d2 > ctx.b2):
            raise FamilyConstructionError(
                f"P1 needs a1 > c1 and d2 > b2 in case {case}"
            )
        w_a = ctx.wx1[ctx.a1 - 1]
        w_d = ctx.wy2[ctx.d2 - 1]
        moves = [(x1, w_a), (x2, y2), (y2, w_d), (w_a, x1), (x1, y1), (w_d, y2)]
        return _build_entry(ctx, "P1", moves, (trace_condition("E1", w1=w_a, w2=w_d),))

    def p2():
        if not (ctx.a1 > ctx.c1 and ctx.c2 > ctx.a2):
            raise FamilyConstructionError(
                f"P2 needs a1 > c1 and c2 > a2 in case {case}"
            )
        w_a = ctx.wx1[ctx.a1 - 1]
        z_c = ctx.zx2[ctx.c2 - 1]
        moves = [(x1, w_a), (x2, y2), (z_c, x2), (w_a, x1), (x1, y1), (x2, z_c)]
        return _build_entry(ctx, "P2", moves, (trace_condition("E2", z=z_c, w=w_a),))

    def p3():
        if not (ctx.c1 > ctx.a1 and ctx.cross_kind == "x1y2"):
            raise FamilyConstructionError(
                f"P3 needs c1 > a1 and a cross edge x1-y2 in case {case}"
            )
        z_c = ctx.zx1[ctx.c1 - 1]
        moves = [(x1, y2), (z_c, x1), (x1, y1), (y2, x1), (x2, y2), (x1, z_c)]
        return _build_entry(ctx, "P3", moves, (trace_condition("E3", z=z_c),))

    def p4():
        if not (ctx.d2 > ctx.b2 and ctx.cross_kind == "x1y2"):
            raise FamilyConstructionError(
                f"P4 needs d2 > b2 and a cross edge x1-y2 in case {case}"
            )
        w_d = ctx.wy2[ctx.d2 - 1]
        moves = [(x1, y2), (y2, w_d), (x2, y2), (y2, x1), (x1, y1), (w_d, y2)]
        return _build_entry(ctx, "P4", moves, (trace_condition("E4", w=w_d),))

    if case in (2, 8):
        return p1()
    if case == 6:
        return p2() if ctx.c2 > ctx.a2 else p1()
    if case == 16:
        if ctx.cross_kind != "x1y2":
            raise FamilyConstructionError(
                "case 16 needs the cross edge oriented x1-y2; apply the index swap first"
            )
        return p3() if ctx.c1 > ctx.a1 else p4()
    raise FamilyConstructionError(f"no supplemental path exists in terminal case {case}")


def build_case2_step2(ctx: Case2Context, family: PathFamily, delta: int) -> PathFamily:
    """Extend the step-1 family with the one extra path when delta = m + 1."""
    extra = delta - ctx.m
    if extra <= 0:
        return family
    if extra > 1:
        raise FamilyConstructionError(f"delta - m = {extra} exceeds the case-2 bound 1")
    entries = list(zip(family.labels, family.paths, family.traces))
    entries.append(_supplemental_entry(ctx))
    return _assemble(ctx, entries)


# ---------------------------------------------------------------------------
# pullback


def _pull_back_path(path: TokenPath, red: Reduction) -> TokenPath:
    g = path.graph
    if red.kind in ("complement", "complement_with_relabel"):
        start = complement_iso(path.start, g.n)
        moves = tuple(TokenMove(m.dst, m.src) for m in path.moves)
        return TokenPath(g, start, moves)
    if red.kind == "swap_xy":
        moves = tuple(TokenMove(m.dst, m.src) for m in reversed(path.moves))
        return TokenPath(g, path.end, moves)
    return path  # swap_indices_12 relabels the context only


def _pull_back_family(family: PathFamily, reductions: tuple[Reduction, ...]) -> PathFamily:
    paths = family.paths
    x_cfg, y_cfg = family.x_cfg, family.y_cfg
    for red in reversed(reductions):
        paths = tuple(_pull_back_path(p, red) for p in paths)
    if paths:
        x_cfg, y_cfg = paths[0].start, paths[0].end
    return PathFamily(x_cfg, y_cfg, paths, family.labels, family.traces)


@dataclass(frozen=True)
class FamilyResult:
    """A verified family plus the normalisation data that produced it."""

    family: PathFamily
    normalized: PathFamily
    context: Case1Context | Case2Context
    reductions: tuple[Reduction, ...]
    delta: int
    m: int

    @property
    def case(self) -> int:
        return 1 if isinstance(self.context, Case1Context) else 2


def build_family(
    tree: Graph, x_cfg: Config, y_cfg: Config, delta: int | None = None
) -> FamilyResult:
    """Construct and fully verify a disjoint family of at least delta paths."""
    x_cfg, y_cfg = make_config(x_cfg), make_config(y_cfg)
    if delta is None:
        delta = min_token_degree(tree, len(x_cfg))
    ctx, reductions = normalize(tree, x_cfg, y_cfg)

    if isinstance(ctx, Case1Context):
        family = build_case1_step1(ctx)
        family = build_case1_step2(ctx, family, delta)
    else:
        # the supplemental x1-y2 paths need the cross edge on that diagonal;
        # relabelling is free because it does not touch X, Y, or any path
        if (
            delta == ctx.m + 1
            and ctx.case_number == 16
            and ctx.cross_kind == "y1x2"
        ):
            ctx = _swap_indices(ctx)
            reductions = reductions + (Reduction("swap_indices_12"),)
        family = build_case2_step1(ctx)
        family = build_case2_step2(ctx, family, delta)

    if len(family) < delta:
        raise FamilyConstructionError(
            f"family of {len(family)} paths is below delta = {delta}"
        )
    pulled = _pull_back_family(family, reductions)
    if pulled.x_cfg != x_cfg or pulled.y_cfg != y_cfg:
        raise FamilyConstructionError("pullback lost the original endpoints")
    ok, clash = pairwise_internally_disjoint(pulled.paths)
    if not ok:
        raise FamilyConstructionError(f"pullback broke internal disjointness at {clash}")
    return FamilyResult(pulled, family, ctx, reductions, delta, ctx.m)


def construct_disjoint_family(tree: Graph, x_cfg: Config, y_cfg: Config) -> PathFamily:
    """The pulled-back verified family for a distance-2 pair over a tree."""
    return build_family(tree, x_cfg, y_cfg).family
