"""Canonical forms of small directed acyclic graphs.

Used to decide isomorphism of Hasse diagrams (direction-preserving,
labels ignored).  The approach is classical: iterated equitable
refinement of a vertex coloring by in/out neighbor color multisets,
followed by individualization with backtracking on the first
non-singleton cell, taking the minimum certificate over the branches.
Weight posets are rigid or nearly so, which keeps branching negligible
even for the ~2000-vertex spin posets.
"""

from __future__ import annotations


def _refine(n, out_adj, in_adj, colors):
    """Equitable refinement; returns a stable dense coloring."""
    while True:
        keys = [
            (
                colors[v],
                tuple(sorted(colors[w] for w in out_adj[v])),
                tuple(sorted(colors[w] for w in in_adj[v])),
            )
            for v in range(n)
        ]
        relabel = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [relabel[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _certificate(n, edges, labeling):
    pos = [0] * n
    for v, p in enumerate(labeling):
        pos[v] = p
    return (n, tuple(sorted((pos[u], pos[v]) for u, v in edges)))


def _search(n, edges, out_adj, in_adj, colors, best):
    colors = _refine(n, out_adj, in_adj, colors)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    target = None
    for c in sorted(cells):
        if len(cells[c]) > 1:
            target = cells[c]
            break
    if target is None:
        labeling = [0] * n
        order = sorted(range(n), key=lambda v: colors[v])
        for p, v in enumerate(order):
            labeling[v] = p
        cert = _certificate(n, edges, labeling)
        if best[0] is None or cert < best[0]:
            best[0] = cert
            best[1] = labeling
        return
    fresh = max(colors) + 1
    for v in target:
        branched = list(colors)
        branched[v] = fresh
        _search(n, edges, out_adj, in_adj, branched, best)


def canonical_form(n: int, edges) -> tuple:
    """Canonical certificate of a digraph on n vertices.

    Two digraphs are isomorphic iff their certificates are equal.
    """
    cert, _ = canonical_labeling(n, edges)
    return cert


def canonical_labeling(n: int, edges):
    """(certificate, labeling): labeling[v] is the canonical position of v."""
    edges = [(u, v) for u, v, *_ in edges]
    out_adj = [[] for _ in range(n)]
    in_adj = [[] for _ in range(n)]
    for u, v in edges:
        out_adj[u].append(v)
        in_adj[v].append(u)
    # longest-path depth from the sources is an isomorphism invariant and
    # a strong initial coloring for graded posets.
    depth = [0] * n
    indeg = [len(in_adj[v]) for v in range(n)]
    queue = [v for v in range(n) if indeg[v] == 0]
    while queue:
        nxt = []
        for v in queue:
            for w in out_adj[v]:
                depth[w] = max(depth[w], depth[v] + 1)
                indeg[w] -= 1
                if indeg[w] == 0:
                    nxt.append(w)
        queue = nxt
    seed = [(depth[v], len(out_adj[v]), len(in_adj[v])) for v in range(n)]
    relabel = {k: i for i, k in enumerate(sorted(set(seed)))}
    colors = [relabel[k] for k in seed]
    best = [None, None]
    _search(n, edges, out_adj, in_adj, colors, best)
    return best[0], best[1]


def poset_certificate(poset) -> tuple:
    return canonical_form(len(poset.elements), poset.edges)


def are_isomorphic(p1, p2):
    """Decide Hasse-diagram isomorphism; returns (flag, witness).

    The witness maps element indices of p1 to element indices of p2 and
    is verified to preserve the edge relation in both directions.
    """
    if len(p1.elements) != len(p2.elements) or len(p1.edges) != len(p2.edges):
        return False, None
    c1, l1 = canonical_labeling(len(p1.elements), p1.edges)
    c2, l2 = canonical_labeling(len(p2.elements), p2.edges)
    if c1 != c2:
        return False, None
    inv2 = [0] * len(p2.elements)
    for v, p in enumerate(l2):
        inv2[p] = v
    witness = [inv2[l1[v]] for v in range(len(p1.elements))]
    e2 = {(u, v) for u, v, *_ in p2.edges}
    assert all((witness[u], witness[v]) in e2 for u, v, *_ in p1.edges)
    return True, witness
