"""Simple root systems built from Cartan data.

Everything is exact integer (or rational) arithmetic.  Simple roots are
numbered as in the Vinberg--Onishchik tables, which is what all the
shipped data tables are keyed to:

* A_n: a chain 1 - 2 - ... - n;
* B_n: a chain with alpha_n short;
* C_n: a chain with alpha_n long;
* D_n: a chain 1 - ... - (n-2) with the fork alpha_{n-1}, alpha_n;
* E_n: a chain 1 - ... - (n-1) with alpha_n attached to the node
  alpha_3 (E6), alpha_4 (E7), alpha_5 (E8);
* F4: a chain with alpha_1, alpha_2 short and alpha_3, alpha_4 long;
* G2: alpha_1 short, alpha_2 long.

A map to Bourbaki numbering is provided in ``BOURBAKI_ALIAS``.

Conventions.  A root gamma is stored as its integer coordinate vector in
the simple-root basis.  A weight mu is stored as the integer vector of
pairings <mu, alpha_i^vee>.  The Cartan matrix is oriented so that
``cartan[i][j] = <alpha_j, alpha_i^vee>``; consequently the pairing
vector of a root equals ``cartan @ coords`` and subtracting alpha_j from
a weight subtracts column j of the Cartan matrix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

ADMISSIBLE_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

_TYPE_RE = re.compile(r"^([A-G])(\d+)$")


class RootSystemError(ValueError):
    """Inadmissible type, weight, or coloring."""


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        check = ADMISSIBLE_RANKS.get(self.family)
        if check is None or not check(self.rank):
            raise RootSystemError(
                f"inadmissible simple type {self.family}{self.rank}"
            )

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = _TYPE_RE.match(text.strip())
        if not m:
            raise RootSystemError(f"cannot parse simple type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def dynkin_edges(stype: SimpleType) -> list[tuple[int, int]]:
    """Undirected diagram edges as 1-based vertex pairs."""
    n = stype.rank
    chain = [(i, i + 1) for i in range(1, n)]
    if stype.family == "D":
        chain = [(i, i + 1) for i in range(1, n - 1)]
        chain.append((n - 2, n))
    elif stype.family == "E":
        branch = {6: 3, 7: 4, 8: 5}[n]
        chain = [(i, i + 1) for i in range(1, n - 1)]
        chain.append((branch, n))
    return chain


def _short_vertices(stype: SimpleType) -> frozenset[int]:
    n = stype.rank
    if stype.family == "B":
        return frozenset({n})
    if stype.family == "C":
        return frozenset(range(1, n))
    if stype.family == "F":
        return frozenset({1, 2})
    if stype.family == "G":
        return frozenset({1})
    return frozenset()


@lru_cache(maxsize=None)
def cartan_matrix(stype: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with cartan[i][j] = <alpha_j, alpha_i^vee> (0-based)."""
    n = stype.rank
    short = _short_vertices(stype)
    mat = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for (u, v) in dynkin_edges(stype):
        for a, b in ((u, v), (v, u)):
            # 2(alpha_a, alpha_b)/(alpha_a, alpha_a): the short row
            # carries the larger entry in absolute value.
            if a in short and b not in short:
                mat[a - 1][b - 1] = -3 if stype.family == "G" else -2
            else:
                mat[a - 1][b - 1] = -1
    return tuple(tuple(row) for row in mat)


@lru_cache(maxsize=None)
def symmetrizer(stype: SimpleType) -> tuple[int, ...]:
    """Squared lengths (alpha_i, alpha_i), normalized to short = 1."""
    n = stype.rank
    short = _short_vertices(stype)
    if not short:
        return tuple(1 for _ in range(n))
    ratio = 3 if stype.family == "G" else 2
    return tuple(1 if i + 1 in short else ratio for i in range(n))


def cartan_determinant(stype: SimpleType) -> int:
    """Exact determinant of the Cartan matrix (fraction-free Bareiss)."""
    mat = [list(row) for row in cartan_matrix(stype)]
    n = len(mat)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if mat[r][k]), None)
            if swap is None:
                return 0
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
        prev = mat[k][k]
    return sign * mat[-1][-1]


# Alias from the table numbering used here to Bourbaki numbering:
# bourbaki_index = BOURBAKI_ALIAS[stype][i] for 1-based i.
def bourbaki_alias(stype: SimpleType) -> dict[int, int]:
    n = stype.rank
    if stype.family == "E":
        # Bourbaki: alpha_2 is the branch leaf, the chain is
        # 1 - 3 - 4 - 5 - ... - n with the branch at node 4.
        branch = {6: 3, 7: 4, 8: 5}[n]
        alias = {}
        # Our chain 1..n-1 runs from the long-arm tip; Bourbaki's chain
        # tip on the long arm is alpha_1 for E6... actually Bourbaki
        # chain order is 1,3,4,5,6[,7[,8]] with branch leaf 2 at node 4.
        bchain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        # align branch positions: ours at `branch`, Bourbaki's at index 3
        # (node 4).  Reverse our chain if needed.
        ours = list(range(1, n))
        if ours.index(branch) != 2:
            ours = ours[::-1]
        for o, b in zip(ours, bchain):
            alias[o] = b
        alias[n] = 2
        return alias
    if stype.family == "F":
        return {1: 4, 2: 3, 3: 2, 4: 1}
    return {i: i for i in range(1, n + 1)}


def _pairings(cartan, coords):
    n = len(coords)
    return tuple(
        sum(cartan[i][j] * coords[j] for j in range(n)) for i in range(n)
    )


@dataclass(frozen=True)
class RootSystem:
    """Positive roots and Coxeter data of one simple type.

    Immutable after construction; safe for concurrent reads.
    """

    stype: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    norms: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    highest_root: tuple[int, ...]
    coxeter: int
    dual_coxeter: int

    @property
    def rank(self) -> int:
        return self.stype.rank

    def root_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.positive_roots)

    def simple_root(self, i: int) -> tuple[int, ...]:
        """Coordinates of alpha_i (1-based)."""
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def pairings(self, coords) -> tuple[int, ...]:
        """Pairing vector <gamma, alpha_i^vee> of a root given by coords."""
        return _pairings(self.cartan, coords)

    def cartan_column(self, i: int) -> tuple[int, ...]:
        """Pairing vector of alpha_i (1-based): column i of the Cartan matrix."""
        return tuple(row[i - 1] for row in self.cartan)

    def is_long(self, i: int) -> bool:
        return self.norms[i - 1] == max(self.norms)

    def root_height(self, coords) -> int:
        return sum(coords)

    def coroot_pairing(self, mu, gamma_coords) -> Fraction:
        """<mu, gamma^vee> for a weight mu (pairings) and root gamma (coords)."""
        num = sum(
            c * d * p for c, d, p in zip(gamma_coords, self.norms, mu)
        )
        gamma_norm = sum(
            c * d * p
            for c, d, p in zip(gamma_coords, self.norms, self.pairings(gamma_coords))
        )
        return Fraction(2 * num, gamma_norm)

    def weight_coords(self, mu) -> tuple[int, ...]:
        """Root-lattice coordinates of a weight, or raise if not in the lattice."""
        n = self.rank
        aug = [[Fraction(self.cartan[i][j]) for j in range(n)] + [Fraction(mu[i])]
               for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col])
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
            # noqa: loop keeps exact Fractions throughout
        coords = [aug[i][n] for i in range(n)]
        if any(c.denominator != 1 for c in coords):
            raise RootSystemError(f"weight {mu} is not in the root lattice")
        return tuple(int(c) for c in coords)


@lru_cache(maxsize=None)
def build_root_system(stype: SimpleType) -> RootSystem:
    """Positive-root closure from the Cartan matrix.

    Breadth-first by height: gamma + alpha_i is admitted iff
    <gamma, alpha_i^vee> - p < 0 where p is the length of the descending
    alpha_i-string through gamma (already known at that height).
    """
    cartan = cartan_matrix(stype)
    norms = symmetrizer(stype)
    n = stype.rank
    roots: set[tuple[int, ...]] = set()
    frontier = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots.update(frontier)
    while frontier:
        nxt = []
        for gamma in frontier:
            pair = _pairings(cartan, gamma)
            for i in range(n):
                p = 0
                down = list(gamma)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in roots:
                        break
                    p += 1
                if pair[i] - p < 0:
                    up = list(gamma)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        roots.add(cand)
                        nxt.append(cand)
        frontier = nxt
    ordered = tuple(sorted(roots, key=lambda c: (sum(c), c)))
    theta = ordered[-1]
    h = sum(theta) + 1
    long_norm = max(norms)
    hstar_sum = sum(
        Fraction(c * d, long_norm) for c, d in zip(theta, norms)
    )
    assert hstar_sum.denominator == 1
    rs = RootSystem(
        stype=stype,
        cartan=cartan,
        norms=norms,
        positive_roots=ordered,
        highest_root=theta,
        coxeter=h,
        dual_coxeter=1 + int(hstar_sum),
    )
    assert 2 * len(ordered) == n * h, f"{stype}: #roots {len(ordered)} != nh/2"
    return rs


def root_order_edges(rs: RootSystem) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Covering pairs (gamma, beta, i) of the root order on Delta^+.

    gamma covers beta with label i (1-based) iff gamma - beta = alpha_i.
    """
    present = rs.root_set()
    edges = []
    for gamma in rs.positive_roots:
        for i in range(rs.rank):
            beta = list(gamma)
            beta[i] -= 1
            if beta[i] >= 0 and tuple(beta) in present:
                edges.append((gamma, tuple(beta), i + 1))
    return edges


def all_simple_types(max_rank: int, families: str = "ABCDEFG"):
    """All admissible simple types with rank <= max_rank, sorted."""
    out = []
    for fam in families:
        for n in range(1, max_rank + 1):
            if ADMISSIBLE_RANKS[fam](n):
                out.append(SimpleType(fam, n))
    return out
