"""Shared test utilities: independent brute-force oracles and validators."""

from __future__ import annotations

from itertools import combinations

from rooklink import Subgrid, Vertex


def brute_ab_feasible(sub: Subgrid, a_set, b_set, forbidden, k: int) -> bool:
    """Exhaustive search: do k disjoint A-B paths exist?

    Independent of the flow engine: plain backtracking over simple paths
    that meet A only at their first vertex and B only at their last.
    """
    from itertools import combinations

    aset = set(a_set)
    bset = set(b_set)
    forb = set(forbidden)
    nbr = {v: sorted(sub.neighbors(v)) for v in sub.vertices()}

    def route(starts, i, used):
        if i == len(starts):
            return True
        a = starts[i]
        if a in used:
            return False
        if a in bset:
            used.add(a)
            ok = route(starts, i + 1, used)
            used.discard(a)
            return ok

        def extend(path):
            head = path[-1]
            for w in nbr[head]:
                if w in used or w in forb or w in aset or w in path:
                    continue
                if w in bset:
                    for v in path:
                        used.add(v)
                    used.add(w)
                    if route(starts, i + 1, used):
                        return True
                    used.discard(w)
                    for v in path:
                        used.discard(v)
                else:
                    path.append(w)
                    if extend(path):
                        return True
                    path.pop()
            return False

        return extend([a])

    for starts in combinations(sorted(aset), k):
        if route(list(starts), 0, set()):
            return True
    return False


def brute_connectivity(sub: Subgrid) -> int:
    """Minimum vertex cut by direct enumeration of removal sets."""
    verts = sorted(sub.vertices())
    n = len(verts)

    def connected(alive) -> bool:
        alive = set(alive)
        start = next(iter(sorted(alive)))
        seen = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for w in sub.neighbors(u):
                if w in alive and w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == len(alive)

    for size in range(n - 1):
        for removal in combinations(verts, size):
            alive = [v for v in verts if v not in set(removal)]
            if len(alive) >= 2 and not connected(alive):
                return size
    return n - 1


def check_ab_system(sub: Subgrid, paths, a_set, b_set, forbidden=()):
    """Assert the structural contract of a disjoint A-B path system."""
    aset = set(a_set)
    bset = set(b_set)
    forb = set(forbidden)
    seen: set[Vertex] = set()
    for path in paths:
        assert path, "empty path"
        assert path[0] in aset, f"path start {path[0]} not in A"
        assert path[-1] in bset, f"path end {path[-1]} not in B"
        assert len(set(path)) == len(path), "path repeats a vertex"
        for v in path:
            assert sub.contains(v), f"{v} inactive"
            assert v not in forb, f"{v} forbidden"
            assert v not in seen, f"{v} on two paths"
            seen.add(v)
        for u, v in zip(path, path[1:]):
            assert sub.adjacent(u, v), f"non-edge {u} -> {v}"
        for v in path[1:]:
            assert v not in aset, f"path meets A at interior vertex {v}"
        for v in path[:-1]:
            assert v not in bset, f"path meets B before its end at {v}"
