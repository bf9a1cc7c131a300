"""Weight posets of weight-multiplicity-free modules.

A weight poset is a finite set of integral weights ordered by the root
order: mu covers nu (with label j) exactly when mu - nu = alpha_j and
both weights lie in the set.  The Hasse diagram of that order is what we
store; everything else (edge statistics, covering polynomials, ratios)
is derived from it.

Weights live over an *ambient*, a tuple of simple types.  For a single
factor the ambient has one entry; a tensor product of modules over
distinct factors is handled by concatenating the pairing vectors, so a
weight is always one flat integer tuple and labels run 1..total_rank
across the blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from .root_system import (
    RootSystem,
    RootSystemError,
    SimpleType,
    build_root_system,
)


def irrep_weights(rs: RootSystem, lam: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """Weight set of the irreducible module with highest weight lam.

    Saturated-set closure: from each known weight mu and each i with
    k = <mu, alpha_i^vee> > 0, the weights mu - j*alpha_i, j = 1..k,
    also occur.
    """
    if any(c < 0 for c in lam):
        raise RootSystemError(f"highest weight {lam} is not dominant")
    cols = [rs.cartan_column(i) for i in range(1, rs.rank + 1)]
    seen = {tuple(lam)}
    frontier = [tuple(lam)]
    while frontier:
        nxt = []
        for mu in frontier:
            for i, col in enumerate(cols):
                k = mu[i]
                cur = mu
                for _ in range(k):
                    cur = tuple(a - b for a, b in zip(cur, col))
                    if cur not in seen:
                        seen.add(cur)
                        nxt.append(cur)
        frontier = nxt
    return frozenset(seen)


def weyl_dimension(rs: RootSystem, lam: tuple[int, ...]) -> int:
    """dim V(lam) by the Weyl dimension formula, in exact rationals."""
    if any(c < 0 for c in lam):
        raise RootSystemError(f"highest weight {lam} is not dominant")
    dim = Fraction(1)
    for gamma in rs.positive_roots:
        # (lam + rho, gamma) / (rho, gamma) with rho = sum of fundamental
        # weights; the normalization of gamma cancels.
        num = sum(c * d * (l + 1) for c, d, l in zip(gamma, rs.norms, lam))
        den = sum(c * d for c, d in zip(gamma, rs.norms))
        dim *= Fraction(num, den)
    assert dim.denominator == 1
    return int(dim)


def is_wmf(rs: RootSystem, lam: tuple[int, ...]) -> bool:
    """True iff V(lam) is weight multiplicity free."""
    return len(irrep_weights(rs, lam)) == weyl_dimension(rs, lam)


@lru_cache(maxsize=None)
def _block_data(ambient: tuple[SimpleType, ...]):
    """Per-label Cartan columns and the depth functional of an ambient.

    Returns (cols, depth_row) where cols[j] is the pairing vector of the
    j-th simple root (0-based, across blocks) and depth_row is the
    rational row vector v with height(coords(mu)) = v . pairings(mu).
    """
    systems = [build_root_system(t) for t in ambient]
    total = sum(rs.rank for rs in systems)
    cols = []
    depth_row = []
    offset = 0
    for rs in systems:
        n = rs.rank
        for i in range(1, n + 1):
            col = [0] * total
            for r, val in enumerate(rs.cartan_column(i)):
                col[offset + r] = val
            cols.append(tuple(col))
        # column sums of the inverse Cartan matrix: solve C^T x = 1.
        aug = [[Fraction(rs.cartan[j][i]) for j in range(n)] + [Fraction(1)]
               for i in range(n)]
        for c in range(n):
            piv = next(r for r in range(c, n) if aug[r][c])
            aug[c], aug[piv] = aug[piv], aug[c]
            aug[c] = [x / aug[c][c] for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        depth_row.extend(aug[i][n] for i in range(n))
        offset += n
    # scale to integers (one global factor preserves the depth order)
    from math import lcm

    scale = lcm(*(f.denominator for f in depth_row))
    depth_row = [int(f * scale) for f in depth_row]
    return tuple(cols), tuple(depth_row)


@dataclass(frozen=True)
class WeightPoset:
    """Hasse diagram of a weight set under the root order.

    ``elements`` are flat pairing vectors in a deterministic order (depth
    below the top element, then lexicographic); ``edges`` are triples of
    element indices and a 1-based simple-root label.
    """

    ambient: tuple[SimpleType, ...]
    elements: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int, int], ...]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def total_rank(self) -> int:
        return sum(t.rank for t in self.ambient)

    def edge_count_by_label(self) -> dict[int, int]:
        counts = {i: 0 for i in range(1, self.total_rank + 1)}
        for _, _, lab in self.edges:
            counts[lab] += 1
        return counts

    def out_degrees(self) -> list[int]:
        deg = [0] * len(self.elements)
        for u, _, _ in self.edges:
            deg[u] += 1
        return deg

    def in_degrees(self) -> list[int]:
        deg = [0] * len(self.elements)
        for _, v, _ in self.edges:
            deg[v] += 1
        return deg

    def covering_polynomial(self, direction: str = "upper") -> tuple[int, ...]:
        """Coefficients lowest-degree-first.

        upper: coeffs[j] = #elements covering exactly j others;
        lower: coeffs[j] = #elements covered by exactly j others.
        """
        if direction == "upper":
            degs = self.out_degrees()
        elif direction == "lower":
            degs = self.in_degrees()
        else:
            raise ValueError(f"unknown direction {direction!r}")
        coeffs = [0] * (max(degs, default=0) + 1)
        for d in degs:
            coeffs[d] += 1
        return tuple(coeffs)

    def ratio(self) -> Fraction:
        """#edges / #elements, exact."""
        return Fraction(self.num_edges, len(self.elements))

    def connected_components(self) -> list[list[int]]:
        """Vertex sets of the undirected components of the Hasse diagram."""
        adj: dict[int, list[int]] = {i: [] for i in range(len(self.elements))}
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = [False] * len(self.elements)
        comps = []
        for start in range(len(self.elements)):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def restrict(self, indices: list[int]) -> "WeightPoset":
        """Sub-poset induced on a vertex subset (edges inside it)."""
        keep = {old: new for new, old in enumerate(indices)}
        elements = tuple(self.elements[i] for i in indices)
        edges = tuple(
            (keep[u], keep[v], lab)
            for u, v, lab in self.edges
            if u in keep and v in keep
        )
        return WeightPoset(self.ambient, elements, edges)

    def to_json_dict(self) -> dict:
        return {
            "ambient": [str(t) for t in self.ambient],
            "elements": [list(e) for e in self.elements],
            "edges": [list(e) for e in self.edges],
        }


def build_poset(
    ambient,
    weights,
    labels: tuple[int, ...] | None = None,
    extra_columns: dict | None = None,
) -> WeightPoset:
    """Build the Hasse diagram of a weight set.

    ``ambient`` is a SimpleType, RootSystem, or tuple of SimpleType;
    ``labels`` restricts the admitted edge labels (1-based, default all);
    ``extra_columns`` maps additional labels (e.g. 0 for the affine
    simple root) to their pairing-vector columns.
    """
    amb = _as_ambient(ambient)
    cols, depth_row = _block_data(amb)
    wset = set(map(tuple, weights))
    if not wset:
        return WeightPoset(amb, (), ())
    # deterministic order: depth below the maximal pairing profile, then lex.
    top_depth = {}
    ref = max(wset)
    for mu in wset:
        d = sum(r * (a - b) for r, a, b in zip(depth_row, ref, mu))
        top_depth[mu] = d
    dmin = min(top_depth.values())
    order = sorted(wset, key=lambda mu: (top_depth[mu] - dmin, mu))
    index = {mu: i for i, mu in enumerate(order)}
    lab_range = labels if labels is not None else tuple(range(1, len(cols) + 1))
    col_of = {j: cols[j - 1] for j in lab_range}
    if extra_columns:
        col_of.update(extra_columns)
    edges = []
    for mu in order:
        for j, col in col_of.items():
            nu = tuple(a - b for a, b in zip(mu, col))
            if nu in wset:
                edges.append((index[mu], index[nu], j))
    edges.sort()
    return WeightPoset(amb, tuple(order), tuple(edges))


def _as_ambient(ambient) -> tuple[SimpleType, ...]:
    if isinstance(ambient, RootSystem):
        return (ambient.stype,)
    if isinstance(ambient, SimpleType):
        return (ambient,)
    return tuple(ambient)


def irrep_poset(stype: SimpleType, lam: tuple[int, ...]) -> WeightPoset:
    """Weight poset of one irreducible module."""
    rs = build_root_system(stype)
    return build_poset(rs, irrep_weights(rs, lam))


def cartesian_product(p1: WeightPoset, p2: WeightPoset) -> WeightPoset:
    """Poset of a tensor product: product elements, per-factor edges."""
    amb = p1.ambient + p2.ambient
    shift = p1.total_rank
    elements = []
    for x in p1.elements:
        for y in p2.elements:
            elements.append(x + y)
    n2 = len(p2.elements)
    index = lambda i, j: i * n2 + j  # noqa: E731
    edges = []
    for u, v, lab in p1.edges:
        for j in range(n2):
            edges.append((index(u, j), index(v, j), lab))
    for u, v, lab in p2.edges:
        for i in range(len(p1.elements)):
            edges.append((index(i, u), index(i, v), lab + shift))
    edges.sort()
    return WeightPoset(amb, tuple(elements), tuple(edges))


def tensor_poset(factors) -> WeightPoset:
    """Weight poset of a tensor product of irreducibles over distinct factors."""
    posets = [irrep_poset(t, lam) for t, lam in factors]
    out = posets[0]
    for p in posets[1:]:
        out = cartesian_product(out, p)
    return out


def poly_mul(a, b) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def poly_eval(coeffs, t: int) -> int:
    return sum(c * t**i for i, c in enumerate(coeffs))


def poly_derivative_at_one(coeffs) -> int:
    return sum(i * c for i, c in enumerate(coeffs))


# ---------------------------------------------------------------------------
# combinatorial models used as independent oracles for the generic closure


def model_subsets(n: int, m: int) -> frozenset[tuple[int, ...]]:
    """(A_n, w_m) weights as m-subsets of [n+1]: pairings from indicators."""
    from itertools import combinations

    out = set()
    for s in combinations(range(1, n + 2), m):
        mem = set(s)
        out.add(tuple((j in mem) - (j + 1 in mem) for j in range(1, n + 1)))
    return frozenset(out)


def model_compositions(n: int, m: int) -> frozenset[tuple[int, ...]]:
    """(A_n, m*w_1) weights as compositions of m into n+1 parts."""
    from itertools import combinations

    out = set()
    # stars and bars over n+1 slots
    for bars in combinations(range(m + n), n):
        parts = []
        prev = -1
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(m + n - 1 - prev)
        out.add(tuple(parts[l] - parts[l + 1] for l in range(n)))
    return frozenset(out)


def model_spin_b(n: int) -> frozenset[tuple[int, ...]]:
    """(B_n, w_n) weights from all sign vectors (s_1..s_n)."""
    from itertools import product as iproduct

    out = set()
    for s in iproduct((1, -1), repeat=n):
        pair = [(s[j] - s[j + 1]) // 2 for j in range(n - 1)]
        pair.append(s[n - 1])
        out.add(tuple(pair))
    return frozenset(out)


def model_spin_d(n: int) -> frozenset[tuple[int, ...]]:
    """(D_n, w_n) weights from sign vectors with an even number of minuses."""
    from itertools import product as iproduct

    out = set()
    for s in iproduct((1, -1), repeat=n):
        if s.count(-1) % 2:
            continue
        pair = [(s[j] - s[j + 1]) // 2 for j in range(n - 2)]
        pair.append((s[n - 2] - s[n - 1]) // 2)
        pair.append((s[n - 2] + s[n - 1]) // 2)
        out.add(tuple(pair))
    return frozenset(out)


def model_vector(stype: SimpleType) -> frozenset[tuple[int, ...]]:
    """Weights of the first-fundamental module of B_n, C_n, or D_n.

    Built in the epsilon realization: weights are {+-eps_i} (plus 0 for
    B_n); pairings follow from alpha_i = eps_i - eps_{i+1} with the last
    root eps_n (B), 2 eps_n (C), or eps_{n-1}+eps_n (D).
    """
    n = stype.rank
    fam = stype.family

    def pairings(m):
        if fam == "B":
            return tuple(
                m[i] - m[i + 1] if i < n - 1 else 2 * m[n - 1]
                for i in range(n)
            )
        if fam == "C":
            return tuple(
                m[i] - m[i + 1] if i < n - 1 else m[n - 1]
                for i in range(n)
            )
        # D_n: labels 1..n-1 are eps_i - eps_{i+1}, label n is
        # eps_{n-1} + eps_n.
        return tuple(
            m[i] - m[i + 1] if i < n - 1 else m[n - 2] + m[n - 1]
            for i in range(n)
        )

    vectors = []
    for k in range(n):
        plus = [0] * n
        plus[k] = 1
        vectors.append(tuple(plus))
        minus = [0] * n
        minus[k] = -1
        vectors.append(tuple(minus))
    if fam == "B":
        vectors.append(tuple([0] * n))
    return frozenset(pairings(m) for m in vectors)


def binom(n: int, k: int) -> int:
    from math import comb

    return comb(n, k) if 0 <= k <= n else 0
