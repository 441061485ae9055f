"""The graph of non-degenerate codes and its stars, tops and lines.

Vertices of ``CodeGraph`` are the non-degenerate ``k``-dimensional
subspaces of GF(q)^n.  Two vertices are adjacent when they meet in a
``(k-1)``-dimensional subspace, i.e. when they share a hyperplane.  The
graph keeps that incidence (hyperplane -> vertices) and derives packed
adjacency bitsets from it on demand.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .codespace import (
    Subspace,
    _extend,
    canonicalize,
    coordinate_profile,
    enumerate_codes,
    enumerate_grassmannian,
    hyperplanes,
    is_nondegenerate,
    projective_points,
    section_rows,
    superspaces,
)
from .errors import (
    DegenerateInput,
    DimensionMismatch,
    InvalidProfile,
    NotAClique,
    NotIncident,
    ParameterOutOfRange,
    ZeroFunctional,
)
from .gf import make_field
from .linalg import combine, rank, reduce_vector, rref


def check_graph_params(n: int, k: int, q: int) -> None:
    make_field(q)
    if not 1 < k < n - 1:
        raise ParameterOutOfRange(f"need 1 < k < n-1, got n={n}, k={k}")


def adjacent(X: Subspace, Y: Subspace) -> bool:
    """True iff ``X`` and ``Y`` meet in dimension ``k - 1``."""
    if (X.q, X.n, X.k) != (Y.q, Y.n, Y.k):
        raise DimensionMismatch("subspaces differ in (q, n, k)")
    return rank(X.field, X.gen + Y.gen) == X.k + 1


class CodeGraph:
    """Graph on a list of equal-dimension subspaces.

    ``stars`` lists every ``(k-1)``-dim subspace contained in some vertex,
    and ``star_members[s]`` the vertices containing ``stars[s]``.
    """

    def __init__(self, vertices: Sequence[Subspace], adjacency: Sequence[int] | None = None):
        self.vertices = list(vertices)
        if self.vertices:
            v0 = self.vertices[0]
            self.n, self.k, self.q = v0.n, v0.k, v0.q
        self.index = {X: i for i, X in enumerate(self.vertices)}
        if len(self.index) != len(self.vertices):
            raise ValueError("duplicate vertices")
        self.stars: list[Subspace] = []
        self.star_members: list[list[int]] = []
        self.vertex_stars: list[list[int]] = [[] for _ in self.vertices]
        if self.vertices and self.k >= 2:
            sid: dict[Subspace, int] = {}
            for i, X in enumerate(self.vertices):
                for H in hyperplanes(X):
                    s = sid.get(H)
                    if s is None:
                        s = sid[H] = len(self.stars)
                        self.stars.append(H)
                        self.star_members.append([])
                    self.star_members[s].append(i)
                    self.vertex_stars[i].append(s)
        if adjacency is not None:
            self.__dict__["adj"] = list(adjacency)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"CodeGraph(n={self.n}, k={self.k}, q={self.q}, vertices={len(self)})"

    @cached_property
    def adj(self) -> list[int]:
        """Neighbour bitsets: bit ``j`` of ``adj[i]`` is set iff ``i ~ j``."""
        if self.vertices and self.k < 2:
            full = (1 << len(self)) - 1
            return [full & ~(1 << i) for i in range(len(self))]
        adj = [0] * len(self)
        for members in self.star_members:
            mask = 0
            for i in members:
                mask |= 1 << i
            for i in members:
                adj[i] |= mask
        return [a & ~(1 << i) for i, a in enumerate(adj)]

    def is_adjacent(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        if self.vertices and self.k >= 2:
            out = set()
            for s in self.vertex_stars[i]:
                out.update(self.star_members[s])
            out.discard(i)
            return sorted(out)
        return [j for j in range(len(self)) if j != i]

    def degree(self, i: int) -> int:
        return bin(self.adj[i]).count("1")

    def edges(self) -> Iterable[tuple[int, int]]:
        for i in range(len(self)):
            for j in self.neighbors(i):
                if i < j:
                    yield i, j

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(len(self)))
        g.add_edges_from(self.edges())
        return g


def pairwise_adjacency(vertices: Sequence[Subspace]) -> list[int]:
    """Adjacency bitsets by testing every pair directly."""
    adj = [0] * len(vertices)
    for i, j in combinations(range(len(vertices)), 2):
        if adjacent(vertices[i], vertices[j]):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


def build_graph(n: int, k: int, q: int, method: str = "incidence") -> CodeGraph:
    """The graph of non-degenerate ``[n, k]_q`` codes.

    ``method="pairwise"`` tests all vertex pairs directly instead of
    deriving adjacency from shared hyperplanes; it is quadratic and meant
    for cross-checking small instances.
    """
    check_graph_params(n, k, q)
    vertices = list(enumerate_codes(n, k, q))
    if method == "pairwise":
        return CodeGraph(vertices, pairwise_adjacency(vertices))
    if method != "incidence":
        raise ValueError(f"unknown method {method!r}")
    return CodeGraph(vertices)


# --- lines, stars, tops ----------------------------------------------------------

def line_set(S: Subspace, U: Subspace) -> list[Subspace]:
    """All ``k``-dim ``X`` with ``S < X < U`` for ``dim S = k-1``, ``dim U = k+1``."""
    if U.k != S.k + 2 or not S.issubspace(U):
        raise NotIncident("need S inside U with dim U = dim S + 2")
    F = S.field
    residues = [reduce_vector(F, S.gen, S.pivots, u) for u in U.gen]
    Q, r, _ = rref(F, residues, S.n)
    assert r == 2
    out = []
    for a in projective_points(F, 2):
        v = combine(F, a, Q, S.n)
        lead = next(x for x in v if x)
        v = tuple(F.mul[F.inv[lead]][x] for x in v)
        out.append(_extend(F, S, v))
    return out


def star_codes(S: Subspace) -> list[Subspace]:
    """Non-degenerate ``(dim S + 1)``-dim subspaces containing ``S``."""
    return [X for X in superspaces(S) if is_nondegenerate(X)]


def top_codes(U: Subspace) -> list[Subspace]:
    """Non-degenerate ``(dim U - 1)``-dim subspaces of ``U``."""
    if not is_nondegenerate(U):
        return []
    F = U.field
    out = []
    for w in projective_points(F, U.k):
        rows = section_rows(F, U.gen, w, U.n)
        # zero columns do not depend on the choice of generators
        if all(any(col) for col in zip(*rows)):
            out.append(Subspace(U.q, U.n, rref(F, rows, U.n)[0]))
    return out


def _check_center(G: CodeGraph, C: Subspace, dim: int) -> None:
    if (C.q, C.n) != (G.q, G.n) or C.k != dim:
        raise DimensionMismatch(f"expected a {dim}-dim subspace of GF({G.q})^{G.n}")


def star_restricted(S: Subspace, G: CodeGraph) -> frozenset[int]:
    """Vertices of ``G`` containing the ``(k-1)``-dim subspace ``S``."""
    _check_center(G, S, G.k - 1)
    return frozenset(G.index[X] for X in star_codes(S))


def top_restricted(U: Subspace, G: CodeGraph) -> frozenset[int]:
    """Vertices of ``G`` contained in the ``(k+1)``-dim subspace ``U``."""
    _check_center(G, U, G.k + 1)
    return frozenset(G.index[X] for X in top_codes(U))


def star_size_formula(cS: int, n: int, k: int, q: int) -> int:
    """Number of non-degenerate ``k``-dim codes through a ``(k-1)``-dim ``S`` with ``c(S) = cS >= 1``."""
    if not 1 <= cS <= n - k + 1:
        raise InvalidProfile(f"c(S) must lie in 1..{n - k + 1}, got {cS}")
    return (q - 1) ** (cS - 1) * q ** (n - k - cS + 1)


# --- hyperplane sections -----------------------------------------------------------

@dataclass
class Sections:
    """``U & C_i`` for every coordinate ``i`` with coordinates grouped by equal sections."""

    sections: list[Subspace]
    groups: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def distinct(self) -> int:
        return len(self.groups)


def _partition(keys: Sequence) -> list[tuple[int, ...]]:
    blocks: dict = {}
    for i, key in enumerate(keys):
        blocks.setdefault(key, []).append(i)
    return sorted(tuple(b) for b in blocks.values())


def coordinate_section(U: Subspace, i: int) -> Subspace | None:
    """``U & C_i`` by clearing column ``i`` of the generators; ``None`` when ``U`` lies in ``C_i``."""
    F = U.field
    rows = U.gen
    r = next((j for j, row in enumerate(rows) if row[i]), None)
    if r is None:
        return None
    mul, sub, inv = F.mul, F.sub, F.inv
    pr = rows[r]
    scale = mul[inv[pr[i]]]
    out = []
    for j, row in enumerate(rows):
        if j == r:
            continue
        f = scale[row[i]]
        out.append(tuple(sub[a][mul[f][b]] for a, b in zip(row, pr)) if f else row)
    R, _, _ = rref(F, out, U.n)
    return Subspace(U.q, U.n, R)


def hyperplane_sections(U: Subspace) -> Sections:
    """Intersect ``U`` with each coordinate hyperplane.

    Raises :class:`DegenerateInput` if ``U`` lies inside some ``C_i``.
    """
    secs = []
    for i in range(U.n):
        sec = coordinate_section(U, i)
        if sec is None:
            raise DegenerateInput(f"U is contained in coordinate hyperplane {i + 1}")
        secs.append(sec)
    return Sections(secs, _partition(secs))


def projective_normal(F, v: Sequence[int]) -> tuple[int, ...]:
    """Scale ``v`` so its first non-zero entry is 1 (zero stays zero)."""
    lead = next((x for x in v if x), 0)
    if lead in (0, 1):
        return tuple(v)
    s = F.mul[F.inv[lead]]
    return tuple(s[x] for x in v)


def column_groups(F, rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Partition of column indices by projective proportionality."""
    return _partition([projective_normal(F, col) for col in zip(*rows)])


def section_by_functional(U: Subspace, w: Sequence[int], basis: Sequence[Sequence[int]] | None = None) -> Subspace:
    """``{sum(a_i v_i) : sum(a_i w_i) = 0}`` where ``v_i`` are ``basis`` (default: ``U.gen``)."""
    basis = U.gen if basis is None else [tuple(b) for b in basis]
    if len(w) != len(basis):
        raise DimensionMismatch(f"functional has length {len(w)}, basis has {len(basis)} rows")
    if not any(w):
        raise ZeroFunctional("w must be non-zero")
    F = U.field
    return canonicalize(F, section_rows(F, basis, w, U.n), U.n)


def missing_columns(F, rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Projective points of F^r (r = number of rows) proportional to no column."""
    present = {projective_normal(F, col) for col in zip(*rows)}
    return [w for w in projective_points(F, len(rows)) if w not in present]


# --- cliques -------------------------------------------------------------------------

@dataclass(frozen=True)
class CliqueRecord:
    kind: str  # "star" or "top"
    center: Subspace
    members: frozenset[int]
    maximal: bool

    @property
    def size(self) -> int:
        return len(self.members)


def _mask(members: Iterable[int]) -> int:
    m = 0
    for i in members:
        m |= 1 << i
    return m


def is_clique(G: CodeGraph, members: Iterable[int]) -> bool:
    members = list(members)
    mask = _mask(members)
    return all((G.adj[i] | 1 << i) & mask == mask for i in members)


def is_maximal_clique(G: CodeGraph, members: Iterable[int]) -> bool:
    """True iff no vertex outside ``members`` is adjacent to all of them."""
    members = list(members)
    if not is_clique(G, members):
        raise NotAClique("members are not pairwise adjacent")
    common = (1 << len(G)) - 1
    for i in members:
        common &= G.adj[i]
    return common & ~_mask(members) == 0


def classify_maximal_cliques(G: CodeGraph) -> list[CliqueRecord]:
    """Maximal cliques built directly from stars and tops, one record per clique.

    A member set that is both a star and a top restriction is reported
    once, as a star.
    """
    records = []
    seen = set()
    for S in enumerate_grassmannian(G.n, G.k - 1, G.q):
        members = star_restricted(S, G)
        if members and members not in seen and is_maximal_clique(G, members):
            seen.add(members)
            records.append(CliqueRecord("star", S, members, True))
    for U in enumerate_codes(G.n, G.k + 1, G.q):
        members = top_restricted(U, G)
        if members and members not in seen and is_maximal_clique(G, members):
            seen.add(members)
            records.append(CliqueRecord("top", U, members, True))
    records.sort(key=lambda r: (r.kind, r.center.sort_key()))
    return records


# --- connectivity --------------------------------------------------------------------

def bfs_distances(G: CodeGraph, source: int) -> list[int]:
    """Graph distances from ``source`` (-1 where unreachable)."""
    dist = [-1] * len(G)
    dist[source] = 0
    if G.vertices and G.k >= 2:
        star_done = [False] * len(G.stars)
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for s in G.vertex_stars[v]:
                if star_done[s]:
                    continue
                star_done[s] = True
                for u in G.star_members[s]:
                    if dist[u] < 0:
                        dist[u] = dist[v] + 1
                        queue.append(u)
    else:
        for u in range(len(G)):
            if u != source:
                dist[u] = 1
    return dist


def connectivity(G: CodeGraph, diameter_limit: int | None = 2000) -> tuple[bool, int | None]:
    """``(connected, diameter)`` by breadth-first search.

    The diameter needs one BFS per vertex and is only computed when the
    graph is connected and has at most ``diameter_limit`` vertices
    (``None`` means no limit); otherwise it is reported as ``None``.
    """
    if len(G) <= 1:
        return True, 0
    connected = min(bfs_distances(G, 0)) >= 0
    if not connected or (diameter_limit is not None and len(G) > diameter_limit):
        return connected, None
    return True, max(max(bfs_distances(G, v)) for v in range(len(G)))


def profile_c(S: Subspace) -> int:
    return coordinate_profile(S).c
