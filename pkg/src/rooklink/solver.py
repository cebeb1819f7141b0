"""Constructive routing of vertex-disjoint path systems on the grid.

solve() always succeeds on any problem with k at most (d1 + d2) // 2
pairs; the construction is inductive on the grid dimensions and every
run is recorded as a trace of case decisions that can be replayed to
reproduce the linkage bit for bit.

The recursion peels columns off the grid (transposing when rows are the
better side to peel):

* one active row: the grid is a clique and each pair is a direct edge;
* two active rows: a flow relocation brings all terminals to one row,
  where the clique finishes the job;
* some pair shares a column: that pair is an edge; the column's other
  terminals are moved out by disjoint paths and the column is deleted;
* otherwise a pair spanning two columns is bridged inside them, the
  remaining terminals of those columns are walked out into free entries
  of the rest of the grid, and both columns are deleted.

Internal failures raise SolverInvariantError carrying the trace: the
construction cannot fail on a legal input, so a failure is a bug, never
an infeasibility verdict.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .grid import ProductGraph, Subgrid, Vertex
from .menger import disjoint_paths
from .problem import Linkage, LinkageProblem, ProblemContractError

_PAD = -1  # index of a padding pair shielding an already-routed endpoint


class SolverInvariantError(RuntimeError):
    """An internal construction step failed; carries the trace so far."""

    def __init__(self, message: str, trace: "SolverTrace | None" = None) -> None:
        super().__init__(message)
        self.trace = trace


def routing_margin_holds(x: int, y: int) -> bool:
    """x * (y - 1) > x + y - 3; true for every x, y >= 2.

    This is the counting margin behind all the relocation steps: an
    x-by-(y-1) block always has more entries than the terminals that
    could compete for them.
    """
    return x * (y - 1) > x + y - 3


def _margin_guard(x: int, y: int) -> None:
    if x >= 2 and y >= 2 and not routing_margin_holds(x, y):
        raise SolverInvariantError(f"counting margin failed for ({x}, {y})")


def cyclic_dual_params(d: int) -> tuple[int, int]:
    """Grid dimensions whose product graph is the dual graph of the
    cyclic d-polytope on d + 2 vertices: (floor(d/2), ceil(d/2))."""
    if d < 2:
        raise ProblemContractError(f"dimension must be at least 2, got {d}")
    return d // 2, (d + 1) // 2


# ---------------------------------------------------------------------------
# trace records


@dataclass(frozen=True)
class TransposeStep:
    reason: str


@dataclass(frozen=True)
class SingleRowStep:
    row: int
    paths: dict[int, tuple[Vertex, ...]]


@dataclass(frozen=True)
class TwoRowsStep:
    target_row: int
    paths: dict[int, tuple[Vertex, ...]]


@dataclass(frozen=True)
class LinePairStep:
    pair: int
    column: int
    bridge: tuple[Vertex, ...]
    moved: tuple[Vertex, ...]
    staying: tuple[Vertex, ...]
    stubs: dict[int, tuple]
    pad: tuple | None = None


@dataclass(frozen=True)
class TwoColumnStep:
    pair: int
    cols: tuple[int, int]
    slack: int
    bend_row: int
    bridge: tuple[Vertex, ...]
    top_rows: tuple[int, ...]
    pushes: dict[Vertex, str] | None
    into_block: int
    in_block: int
    matching: dict[int, int] | None
    stubs: dict[int, tuple]
    pad: tuple | None = None


@dataclass(frozen=True)
class SolverTrace:
    steps: tuple = ()

    @property
    def depth(self) -> int:
        return sum(1 for s in self.steps if not isinstance(s, TransposeStep))


def _fmt_path(path) -> str:
    return "".join(f"({v[0]},{v[1]})" for v in path)


def render_trace(trace: SolverTrace) -> str:
    lines = []
    for n, st in enumerate(trace.steps, start=1):
        if isinstance(st, TransposeStep):
            lines.append(f"step {n}: transpose reason={st.reason}")
        elif isinstance(st, SingleRowStep):
            lines.append(f"step {n}: single-row row={st.row} pairs={len(st.paths)}")
        elif isinstance(st, TwoRowsStep):
            lines.append(f"step {n}: two-rows target-row={st.target_row} pairs={len(st.paths)}")
        elif isinstance(st, LinePairStep):
            lines.append(
                f"step {n}: pair-in-column pair={st.pair + 1} column={st.column}"
                f" bridge={_fmt_path(st.bridge)} moved={len(st.moved)} staying={len(st.staying)}"
            )
        else:
            pushes = "-" if st.pushes is None else ",".join(
                f"{tuple(v)}:{how}" for v, how in sorted(st.pushes.items()))
            matching = "-" if st.matching is None else ",".join(
                f"{a}->{b}" for a, b in sorted(st.matching.items()))
            pad = "-" if st.pad is None else f"{tuple(st.pad[0])}+{tuple(st.pad[1])}"
            lines.append(
                f"step {n}: two-columns pair={st.pair + 1} cols={st.cols} slack={st.slack}"
                f" bend-row={st.bend_row} bridge={_fmt_path(st.bridge)} top-rows={st.top_rows}"
                f" into-block={st.into_block} in-block={st.in_block}"
                f" pushes={pushes} matching={matching} pad={pad}"
            )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# reusable routing pieces (each independently testable)


def bridge_candidates(rows, block_cols, s: Vertex, t: Vertex):
    """The len(rows)-many internally disjoint s-t paths inside two columns.

    Two bends of length two (through s's row or t's row) and one
    length-three path through every remaining row; each candidate is
    returned with the row that contributes both of its block entries.
    """
    c_s, c_t = s[1], t[1]
    if {c_s, c_t} != set(block_cols) or c_s == c_t or s[0] == t[0]:
        raise ValueError("bridge endpoints must span the two block columns on distinct rows")
    cands = [
        ([s, Vertex(s[0], c_t), t], s[0]),
        ([s, Vertex(t[0], c_s), t], t[0]),
    ]
    for r in rows:
        if r != s[0] and r != t[0]:
            cands.append(([s, Vertex(r, c_s), Vertex(r, c_t), t], r))
    return cands


def bridge_path(rows, block_cols, s: Vertex, t: Vertex, occupied) -> tuple[list[Vertex], int]:
    """First candidate whose interior avoids every other terminal.

    At most len(rows) - 1 terminals other than s, t can sit in the two
    columns and the candidates are internally disjoint, so one is free.
    """
    others = set(occupied) - {s, t}
    for path, bend in bridge_candidates(rows, block_cols, s, t):
        if not any(v in others for v in path[1:-1]):
            return list(path), bend
    raise SolverInvariantError("every bridge candidate is blocked; occupancy cap violated")


def doubled_row_matching(rows, block_cols, occupied, anchors) -> dict[int, int]:
    """Injective map from rows whose two block entries are both plain
    terminals to rows whose block entries hold at most an anchor.

    With at most len(rows) plain terminals in the block there are always
    enough spare rows; lowest labels are matched first.
    """
    anchors = set(anchors)
    occupied = set(occupied)
    doubled = []
    spare = []
    for r in sorted(rows):
        cells = [Vertex(r, c) for c in block_cols]
        plain = [v for v in cells if v in occupied and v not in anchors]
        if len(plain) == 2:
            doubled.append(r)
        elif not plain:
            spare.append(r)
    if len(doubled) > len(spare):
        raise SolverInvariantError("doubled rows outnumber spare rows in the block")
    return dict(zip(doubled, spare))


def drain_block(rows, block_cols, dest_cols, occupied, anchors,
                matching: dict[int, int] | None = None) -> dict[Vertex, list[Vertex]]:
    """Walk every plain terminal out of the two-column block.

    A row holding one plain terminal crosses directly into a free entry
    of the same destination row.  A doubled row sends one terminal
    through the matched spare row's free block entry and the other
    straight across; all paths are pairwise disjoint, never pass through
    a terminal, and no destination row receives more than one endpoint.
    Requires a free destination entry in every block row.
    """
    anchors = set(anchors)
    occupied = set(occupied)
    if matching is None:
        matching = doubled_row_matching(rows, block_cols, occupied, anchors)
    taken = set(occupied)

    def free_dest(r: int) -> Vertex:
        for c in dest_cols:
            w = Vertex(r, c)
            if w not in taken:
                return w
        raise SolverInvariantError(f"no free destination entry in row {r}")

    out: dict[Vertex, list[Vertex]] = {}
    for r in sorted(rows):
        plain = [Vertex(r, c) for c in block_cols
                 if Vertex(r, c) in occupied and Vertex(r, c) not in anchors]
        if not plain:
            continue
        if len(plain) == 1:
            x = plain[0]
            w = free_dest(r)
            out[x] = [x, w]
            taken.add(w)
        else:
            spare = matching.get(r)
            if spare is None:
                raise SolverInvariantError(f"doubled row {r} missing from the matching")
            x1, x2 = plain
            if Vertex(spare, x1[1]) not in taken:
                detour, direct = x1, x2
            elif Vertex(spare, x2[1]) not in taken:
                detour, direct = x2, x1
            else:
                raise SolverInvariantError(f"spare row {spare} has no free block entry")
            via = Vertex(spare, detour[1])
            w1 = free_dest(spare)
            out[detour] = [detour, via, w1]
            taken.update((via, w1))
            w2 = free_dest(r)
            out[direct] = [direct, w2]
            taken.add(w2)
    return out


# ---------------------------------------------------------------------------
# solver internals


class _Moves:
    """Accumulates relocation stubs; one chain per original terminal."""

    def __init__(self, terminals) -> None:
        self.cur_of = {t: t for t in terminals}
        self.origin_of = {t: t for t in terminals}
        self.path: dict[Vertex, list[Vertex]] = {}

    def apply(self, cur: Vertex, path) -> None:
        origin = self.origin_of.pop(cur)
        prev = self.path.get(origin)
        self.path[origin] = (prev[:-1] + list(path)) if prev else list(path)
        self.cur_of[origin] = path[-1]
        self.origin_of[path[-1]] = origin

    def dest(self, origin: Vertex) -> Vertex:
        return self.cur_of[origin]

    def stub(self, origin: Vertex):
        p = self.path.get(origin)
        return tuple(p) if p else None


def _stitch(inner, stub_s, stub_t):
    path = list(inner)
    if stub_s is not None and path[0] != stub_s[-1]:
        path.reverse()
    elif stub_s is None and stub_t is not None and path[-1] != stub_t[-1]:
        path.reverse()
    if stub_s is not None:
        if path[0] != stub_s[-1]:
            raise SolverInvariantError("stub does not meet its recursive path")
        path = list(stub_s) + path[1:]
    if stub_t is not None:
        if path[-1] != stub_t[-1]:
            raise SolverInvariantError("stub does not meet its recursive path")
        path = path + list(stub_t)[-2::-1]
    return path


def _finish(step, rec: dict[int, list[Vertex]]) -> dict[int, list[Vertex]]:
    """Shared stitching used both by the solver and by trace replay."""
    out = dict(rec)
    if step.pad is not None:
        out.pop(_PAD, None)
    for idx, (stub_s, stub_t) in step.stubs.items():
        inner = out.get(idx)
        if inner is None:
            if stub_s is None or stub_t is not None:
                raise SolverInvariantError(f"pair {idx} missing from the recursion")
            out[idx] = list(stub_s)
        else:
            out[idx] = _stitch(inner, stub_s, stub_t)
    out[step.pair] = list(step.bridge)
    return out


def _flip_vertex(v: Vertex) -> Vertex:
    return Vertex(v[1], v[0])


def _partner_of(pairs, v: Vertex):
    for s, t, idx in pairs:
        if s == v:
            return t, idx
        if t == v:
            return s, idx
    raise SolverInvariantError(f"vertex {tuple(v)} is not a terminal")


def _first_free_vertex(rows, cols, occupied) -> Vertex:
    for r in rows:
        for c in cols:
            w = Vertex(r, c)
            if w not in occupied:
                return w
    raise SolverInvariantError("no free vertex available for a padding pair")


def _escape_path(rows, block_cols, rest_cols, start: Vertex, partner: Vertex,
                 occupied, bend: int) -> list[Vertex]:
    """Shortest way out of the two-column block for a boxed-in terminal.

    Breadth-first inside the block, off the bend row, never through a
    terminal; stops the moment it can step onto the wide side, at the
    partner or at any free entry off the bend row.  Ties break to the
    lexicographically smallest exit.
    """
    ok_rows = [r for r in rows if r != bend]
    dist = {start: 0}
    parent: dict[Vertex, Vertex] = {}
    queue = deque([start])
    exits = []
    while queue:
        u = queue.popleft()
        for c in rest_cols:
            w = Vertex(u[0], c)
            if w == partner or w not in occupied:
                exits.append((dist[u] + 1, w, u))
        nbrs = [Vertex(r, u[1]) for r in ok_rows if r != u[0]]
        other = block_cols[1] if u[1] == block_cols[0] else block_cols[0]
        nbrs.append(Vertex(u[0], other))
        for w in sorted(nbrs):
            if w not in dist and w not in occupied:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    if not exits:
        raise SolverInvariantError("boxed-in terminal cannot leave the block")
    _, target, via = min(exits)
    path = [target]
    u: Vertex | None = via
    while u is not None:
        path.append(u)
        u = parent.get(u)
    path.reverse()
    return path


def _base_single_row(rows, pairs, steps):
    result = {idx: [s, t] for s, t, idx in pairs}
    steps.append(SingleRowStep(rows[0], {i: tuple(p) for i, p in result.items()}))
    return result


def _base_two_rows(rows, cols, pairs, steps, base):
    target = rows[1]
    terminals = sorted(v for s, t, _ in pairs for v in (s, t))
    goal = [Vertex(target, c) for c in cols]
    ps = disjoint_paths(Subgrid(base, rows, cols), terminals, goal, (), len(terminals))
    if ps is None:
        raise SolverInvariantError("two-row relocation infeasible; contradicts connectivity")
    stub = {p[0]: list(p) for p in ps}
    if set(stub) != set(terminals):
        raise SolverInvariantError("two-row relocation missed a terminal")
    result = {}
    for s, t, idx in pairs:
        result[idx] = stub[s] + stub[t][::-1]
    steps.append(TwoRowsStep(target, {i: tuple(p) for i, p in result.items()}))
    return result


def _case_line_pair(rows, cols, pairs, chosen, steps, base):
    s1, t1, i1 = chosen
    col0 = s1[1]
    anchors = {s1, t1}
    occupied = {v for s, t, _ in pairs for v in (s, t)}
    movers = sorted(v for v in occupied if v[1] == col0 and v not in anchors)
    staying = sorted(v for v in occupied if v[1] != col0)
    rest_cols = tuple(c for c in cols if c != col0)
    moves = _Moves(occupied)
    if movers:
        _margin_guard(len(rows), len(cols))
        free = [Vertex(r, c) for r in rows for c in rest_cols if Vertex(r, c) not in occupied]
        if len(free) < len(movers):
            raise SolverInvariantError("not enough free entries outside the column")
        ps = disjoint_paths(Subgrid(base, rows, cols), movers, free,
                            staying + sorted(anchors), len(movers))
        if ps is None:
            raise SolverInvariantError("column evacuation infeasible; contradicts connectivity")
        for p in ps:
            moves.apply(p[0], p)
    rec_pairs = []
    stubs = {}
    for s, t, idx in pairs:
        if idx == i1:
            continue
        rec_pairs.append((moves.dest(s), moves.dest(t), idx))
        stub_s, stub_t = moves.stub(s), moves.stub(t)
        if stub_s is not None or stub_t is not None:
            stubs[idx] = (stub_s, stub_t)
    step = LinePairStep(i1, col0, (s1, t1), tuple(movers), tuple(staying), stubs)
    steps.append(step)
    rec = _solve(rows, rest_cols, rec_pairs, steps)
    return _finish(step, rec)


def _case_two_columns(rows, cols, pairs, steps, base):
    s1, t1, i1 = pairs[0]
    block_cols = (s1[1], t1[1])
    block_set = frozenset(block_cols)
    rest_cols = tuple(c for c in cols if c not in block_set)
    anchors = {s1, t1}
    occupied = {v for s, t, _ in pairs for v in (s, t)}
    d1p, d2p = len(rows) - 1, len(cols) - 1
    block_terms = sorted(v for v in occupied if v[1] in block_set)
    slack = d1p + 2 - len(block_terms)
    if not 0 <= slack <= d1p:
        raise SolverInvariantError("two-column occupancy out of range")
    bridge, bend = bridge_path(rows, block_cols, s1, t1, occupied)
    others = [v for v in block_terms if v not in anchors]
    if any(v[0] == bend for v in others):
        raise SolverInvariantError("plain terminal on the bridge row")

    moves = _Moves(occupied)
    pad = None
    pushes = None
    matching = None
    into_block = 0
    in_block = 0
    top_rows = (bend,)
    solved_idx = None
    solved_path = None

    if slack == d1p:
        pass  # the block holds only the bridged pair; nothing to move
    elif slack == d1p - 1:
        x2 = others[0]
        partner, idx2 = _partner_of(pairs, x2)
        _margin_guard(d1p - 1, d2p)
        path = _escape_path(rows, block_cols, rest_cols, x2, partner, occupied, bend)
        if path[-1] == partner:
            # the escape finished the whole pair; shield its endpoint from
            # the recursion with a padding pair whose path gets discarded
            solved_idx, solved_path = idx2, path
            pad_mate = _first_free_vertex(rows, rest_cols, occupied)
            pad = (partner, pad_mate)
        else:
            occupied.discard(x2)
            occupied.add(path[-1])
            moves.apply(x2, path)
    else:
        full_rows = tuple(r for r in rows
                          if all(Vertex(r, c) in occupied for c in rest_cols))
        if len(full_rows) > slack:
            raise SolverInvariantError("more saturated rows than the occupancy slack allows")
        _margin_guard(slack + 1, d2p)
        top_rows = tuple(sorted({bend, *full_rows}))
        low_rows = tuple(r for r in rows if r not in top_rows)
        movers = sorted(v for v in occupied
                        if v[1] in block_set and v[0] in top_rows and v[0] != bend
                        and v not in anchors)
        in_block = sum(1 for v in occupied
                       if v[1] in block_set and v[0] in low_rows and v not in anchors)
        into_block = len(movers)
        if movers:
            if slack >= 2:
                net_rows = tuple(r for r in rows if r != bend)
                free = [Vertex(r, c) for r in low_rows for c in block_cols
                        if Vertex(r, c) not in occupied]
                if len(free) < len(movers):
                    raise SolverInvariantError("low block lacks room for relocated terminals")
                mover_set = set(movers)
                forb = sorted(v for v in occupied
                              if v[1] in block_set and v[0] != bend and v not in mover_set)
                ps = disjoint_paths(Subgrid(base, net_rows, block_cols), movers, free,
                                    forb, len(movers))
                if ps is None:
                    raise SolverInvariantError("in-block relocation infeasible")
                for p in ps:
                    occupied.discard(p[0])
                    occupied.add(p[-1])
                    moves.apply(p[0], p)
            else:
                # slack == 1: a single saturated row above the low block;
                # push its terminals one step down their column, or straight
                # out of the block when the column below is packed
                pushes = {}
                for x in movers:
                    down = next((r for r in low_rows if Vertex(r, x[1]) not in occupied), None)
                    if down is not None:
                        path = [x, Vertex(down, x[1])]
                        pushes[x] = "down"
                    else:
                        across = next((c for c in rest_cols
                                       if Vertex(x[0], c) not in occupied), None)
                        if across is None:
                            raise SolverInvariantError(
                                "saturated row cannot exit; the pair would have been adjacent")
                        path = [x, Vertex(x[0], across)]
                        pushes[x] = "across"
                    occupied.discard(x)
                    occupied.add(path[-1])
                    moves.apply(x, path)
        block_now = sorted(v for v in occupied
                           if v[1] in block_set and v[0] in low_rows and v not in anchors)
        if block_now:
            for r in low_rows:
                if all(Vertex(r, c) in occupied for c in rest_cols):
                    raise SolverInvariantError("destination row saturated after relabeling")
            matching = doubled_row_matching(low_rows, block_cols, occupied, anchors)
            drained = drain_block(low_rows, block_cols, rest_cols, occupied, anchors, matching)
            for cur in sorted(drained):
                path = drained[cur]
                occupied.discard(cur)
                occupied.add(path[-1])
                moves.apply(cur, path)

    rec_pairs = []
    stubs = {}
    rest_set = frozenset(rest_cols)
    for s, t, idx in pairs[1:]:
        if idx == solved_idx:
            path = solved_path if solved_path[0] == s else solved_path[::-1]
            stubs[idx] = (tuple(path), None)
            continue
        ns, nt = moves.dest(s), moves.dest(t)
        if ns[1] not in rest_set or nt[1] not in rest_set:
            raise SolverInvariantError("a terminal was left behind in the deleted columns")
        rec_pairs.append((ns, nt, idx))
        stub_s, stub_t = moves.stub(s), moves.stub(t)
        if stub_s is not None or stub_t is not None:
            stubs[idx] = (stub_s, stub_t)
    if pad is not None:
        rec_pairs.append((pad[0], pad[1], _PAD))
    step = TwoColumnStep(i1, block_cols, slack, bend, tuple(bridge), top_rows,
                         pushes, into_block, in_block, matching, stubs, pad)
    steps.append(step)
    rec = _solve(rows, rest_cols, rec_pairs, steps)
    return _finish(step, rec)


def _transpose_and_solve(rows, cols, pairs, steps, reason, retransposed=False):
    steps.append(TransposeStep(reason))
    flipped = [(_flip_vertex(s), _flip_vertex(t), idx) for s, t, idx in pairs]
    rec = _solve(cols, rows, flipped, steps, retransposed)
    return {idx: [_flip_vertex(v) for v in path] for idx, path in rec.items()}


def _solve(rows, cols, pairs, steps, retransposed=False):
    if not pairs:
        return {}
    base = ProductGraph(rows[-1], cols[-1])
    if len(rows) > 2 >= len(cols):
        return _transpose_and_solve(rows, cols, pairs, steps, "narrow-side-first")
    if len(rows) == 1:
        return _base_single_row(rows, pairs, steps)
    if len(rows) == 2:
        return _base_two_rows(rows, cols, pairs, steps, base)
    for s, t, idx in pairs:
        if s[1] == t[1]:
            return _case_line_pair(rows, cols, pairs, (s, t, idx), steps, base)
        if s[0] == t[0]:
            return _transpose_and_solve(rows, cols, pairs, steps, "pair-in-row")
    s1, t1, _ = pairs[0]
    block = {s1[1], t1[1]}
    in_block = sum(1 for s, t, _ in pairs for v in (s, t) if v[1] in block)
    if in_block > len(rows) + 1:
        if retransposed:
            raise SolverInvariantError("both the column and the row block overflow")
        return _transpose_and_solve(rows, cols, pairs, steps, "two-column-overflow", True)
    return _case_two_columns(rows, cols, pairs, steps, base)


def solver_capacity(n_rows: int, n_cols: int) -> int:
    """Largest pair count the construction accepts for the active sizes.

    This is the guaranteed bound (d1' + d2') // 2, except that a single
    active row or column is a complete graph on n vertices and links any
    n // 2 pairs outright.
    """
    if n_rows == 1:
        return n_cols // 2
    if n_cols == 1:
        return n_rows // 2
    return (n_rows - 1 + n_cols - 1) // 2


def solve(problem: LinkageProblem) -> tuple[Linkage, SolverTrace]:
    """Route every pair of the problem with pairwise disjoint paths.

    Requires k <= (d1' + d2') // 2 for the problem's active dimensions
    (k <= |V| // 2 when the grid is a single clique); within that bound
    the construction always succeeds, so any internal failure surfaces
    as SolverInvariantError rather than a result.
    """
    sub = problem.subgrid
    if problem.k > solver_capacity(sub.n_rows, sub.n_cols):
        raise ProblemContractError(
            f"{problem.k} pairs exceed the guaranteed bound"
            f" {solver_capacity(sub.n_rows, sub.n_cols)};"
            " use the exhaustive oracle for such instances")
    pairs = [(s, t, i) for i, (s, t) in enumerate(problem.pairs)]
    steps: list = []
    try:
        result = _solve(sub.rows, sub.cols, pairs, steps)
    except SolverInvariantError as err:
        err.trace = SolverTrace(tuple(steps))
        raise
    linkage = Linkage(tuple(tuple(result[i]) for i in range(problem.k)))
    return linkage, SolverTrace(tuple(steps))


def replay(problem: LinkageProblem, trace: SolverTrace) -> Linkage:
    """Rebuild the linkage from the recorded case decisions alone."""
    acc: dict[int, list[Vertex]] = {}
    for step in reversed(trace.steps):
        if isinstance(step, TransposeStep):
            acc = {i: [_flip_vertex(v) for v in p] for i, p in acc.items()}
        elif isinstance(step, (SingleRowStep, TwoRowsStep)):
            for i, p in step.paths.items():
                acc[i] = list(p)
        else:
            acc = _finish(step, acc)
    return Linkage(tuple(tuple(acc[i]) for i in range(len(problem.pairs))))
