#!/usr/bin/env python3
"""Route a small linkage problem and inspect the solver's case log.

The 3x4 grid (K^3 x K^4) is 2-linked: any two disjoint pairs of
vertices can be joined by two vertex-disjoint paths, no matter how
awkwardly they interleave.
"""

from rooklink import (LinkageProblem, ProductGraph, Vertex, render_trace,
                      replay, solve, verify)

grid = ProductGraph(2, 3)
problem = LinkageProblem(grid, (
    (Vertex(0, 0), Vertex(2, 1)),
    (Vertex(1, 2), Vertex(0, 3)),
))

linkage, trace = solve(problem)

print("problem on the 3x4 grid:")
for i, (s, t) in enumerate(problem.pairs, start=1):
    print(f"  pair {i}: {tuple(s)} -- {tuple(t)}")

print("\nrouted paths:")
for i, path in enumerate(linkage.paths, start=1):
    print(f"  path {i}: " + " -> ".join(str(tuple(v)) for v in path))

print("\ncase log:")
print(render_trace(trace))

report = verify(problem, linkage)
print(f"\nindependent verifier: {'pass' if report.ok else report.reason}")
print(f"trace replay reproduces the linkage: {replay(problem, trace) == linkage}")
