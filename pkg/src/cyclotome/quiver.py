"""Oriented ADE Dynkin quivers: validation, Euler form, Cartan matrix, heights.

A quiver here is an orientation of a simply-laced Dynkin diagram (types A, D,
E).  Vertices are labelled 1..n, arrows are (source, target) pairs.  All later
root-of-unity combinatorics only needs the Euler form, the Cartan matrix and
an integer height function, so everything in this module is exact integer
arithmetic on plain tuples and dicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class QuiverError(ValueError):
    pass


class NotATreeError(QuiverError):
    """The underlying graph has a cycle or is disconnected."""


class NotSimplyLacedError(QuiverError):
    """Two arrows join the same pair of vertices (or a loop exists)."""


class NotADEError(QuiverError):
    """The underlying tree is not of type A, D, E6, E7 or E8."""


#: Coxeter numbers by type family; re-derived in the tests as the
#: multiplicative order of the Coxeter transformation.
COXETER_NUMBER = {
    "A": lambda n: n + 1,
    "D": lambda n: 2 * n - 2,
    "E": {6: 12, 7: 18, 8: 30},
}


@dataclass(frozen=True)
class DynkinQuiver:
    """An oriented ADE tree with its detected type and Coxeter number."""

    n: int
    arrows: tuple[tuple[int, int], ...]
    dynkin_type: str
    coxeter_number: int

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> set[frozenset[int]]:
        return {frozenset(a) for a in self.arrows}

    def adjacent(self, i: int, j: int) -> bool:
        return frozenset((i, j)) in self.edges()

    def orientation_label(self) -> str:
        return ",".join(f"{s}>{t}" for s, t in sorted(self.arrows))

    def __str__(self) -> str:
        return f"{self.dynkin_type}[{self.orientation_label()}]"


def _classify_tree(n: int, edges: list[tuple[int, int]]) -> str:
    """Detect the ADE type of a tree from its degree sequence and arm lengths."""
    deg = {i: 0 for i in range(1, n + 1)}
    adj = {i: [] for i in range(1, n + 1)}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u].append(v)
        adj[v].append(u)
    if any(d > 3 for d in deg.values()):
        raise NotADEError("vertex of degree > 3")
    branch = [i for i, d in deg.items() if d == 3]
    if len(branch) > 1:
        raise NotADEError("more than one branch vertex")
    if not branch:
        return f"A{n}"
    # Arm lengths (edge counts) from the unique degree-3 vertex.
    c = branch[0]
    arms = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while deg[cur] == 2:
            nxt = next(x for x in adj[cur] if x != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    if arms == [1, 2, 2]:
        return "E6"
    if arms == [1, 2, 3]:
        return "E7"
    if arms == [1, 2, 4]:
        return "E8"
    raise NotADEError(f"arm lengths {arms} are not ADE")


def _coxeter_number(dynkin_type: str) -> int:
    family, rank = dynkin_type[0], int(dynkin_type[1:])
    if family == "E":
        return COXETER_NUMBER["E"][rank]
    return COXETER_NUMBER[family](rank)


def make_dynkin_quiver(n: int, arrows: list[tuple[int, int]]) -> DynkinQuiver:
    """Validate an edge list and return the classified quiver.

    Raises NotATreeError / NotSimplyLacedError / NotADEError when the input is
    not an orientation of a connected simply-laced ADE tree.
    """
    if n < 1:
        raise QuiverError("need at least one vertex")
    for s, t in arrows:
        if not (1 <= s <= n and 1 <= t <= n):
            raise QuiverError(f"arrow {s}->{t} uses an unknown vertex")
        if s == t:
            raise NotSimplyLacedError(f"loop at vertex {s}")
    edges = [tuple(sorted((s, t))) for s, t in arrows]
    if len(set(edges)) != len(edges):
        raise NotSimplyLacedError("parallel edges")
    if len(arrows) != n - 1:
        raise NotATreeError(f"{len(arrows)} arrows on {n} vertices is not a tree")
    # Connectivity: n-1 distinct edges + connected <=> tree (hence acyclic).
    seen = {1}
    frontier = [1]
    adj = {i: set() for i in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    while frontier:
        x = frontier.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    if len(seen) != n:
        raise NotATreeError("underlying graph is disconnected (so it has a cycle)")
    dynkin_type = _classify_tree(n, edges)
    return DynkinQuiver(n, tuple(arrows), dynkin_type, _coxeter_number(dynkin_type))


def load_quiver(text: str) -> DynkinQuiver:
    """Parse the plain-text quiver format.

    One line ``vertices: n`` followed by ``arrow: s t`` lines; blank lines and
    ``#`` comments are ignored.
    """
    n = None
    arrows: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key = key.strip().lower()
        if key == "vertices":
            n = int(rest)
        elif key == "arrow":
            s, t = rest.split()
            arrows.append((int(s), int(t)))
        else:
            raise QuiverError(f"unrecognized line: {raw!r}")
    if n is None:
        raise QuiverError("missing 'vertices: n' line")
    return make_dynkin_quiver(n, arrows)


# -- standard tree shapes and orientations -----------------------------------

def standard_edges(dynkin_type: str) -> list[tuple[int, int]]:
    """Undirected edges of the standard labelled ADE tree.

    A_n is the chain 1-2-...-n.  D_n is the chain 1-...-(n-2) with both n-1
    and n attached to n-2.  E_n is the chain 1-...-(n-1) with n attached to 3.
    """
    family, rank = dynkin_type[0].upper(), int(dynkin_type[1:])
    if family == "A":
        if rank < 1:
            raise NotADEError(dynkin_type)
        return [(k, k + 1) for k in range(1, rank)]
    if family == "D":
        if rank < 4:
            raise NotADEError(dynkin_type)
        return [(k, k + 1) for k in range(1, rank - 2)] + [
            (rank - 2, rank - 1),
            (rank - 2, rank),
        ]
    if family == "E":
        if rank not in (6, 7, 8):
            raise NotADEError(dynkin_type)
        return [(k, k + 1) for k in range(1, rank - 1)] + [(3, rank)]
    raise NotADEError(dynkin_type)


def orient(dynkin_type: str, orientation: str = "linear") -> DynkinQuiver:
    """Built-in orientations of the standard tree.

    ``linear``      every edge points from the higher label to the lower one
                    (for A_n this is the chain n -> ... -> 2 -> 1);
    ``alternating`` every vertex is a source or a sink (arrows point from odd
                    to even depth, measured from vertex 1).
    """
    edges = standard_edges(dynkin_type)
    n = max(max(e) for e in edges) if edges else 1
    if orientation == "linear":
        arrows = [(max(u, v), min(u, v)) for u, v in edges]
    elif orientation == "alternating":
        depth = _depths(n, edges)
        arrows = [
            (u, v) if depth[u] % 2 == 1 else (v, u)
            for u, v in edges
        ]
    else:
        raise QuiverError(f"unknown orientation {orientation!r}")
    return make_dynkin_quiver(n, arrows)


def _depths(n: int, edges: list[tuple[int, int]]) -> dict[int, int]:
    adj = {i: [] for i in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    depth = {1: 0}
    frontier = [1]
    while frontier:
        x = frontier.pop()
        for y in adj[x]:
            if y not in depth:
                depth[y] = depth[x] + 1
                frontier.append(y)
    return depth


def all_orientations(dynkin_type: str):
    """Yield every orientation of the standard tree (2^(n-1) quivers)."""
    edges = standard_edges(dynkin_type)
    n = max(max(e) for e in edges) if edges else 1
    for flips in product((False, True), repeat=len(edges)):
        arrows = [
            (v, u) if flip else (u, v)
            for (u, v), flip in zip(edges, flips)
        ]
        yield make_dynkin_quiver(n, arrows)


def some_orientations(dynkin_type: str, count: int = 3) -> list[DynkinQuiver]:
    """A deterministic sample of orientations: linear, alternating, reversed-linear, ..."""
    edges = standard_edges(dynkin_type)
    n = max(max(e) for e in edges) if edges else 1
    picks = [orient(dynkin_type, "linear"), orient(dynkin_type, "alternating")]
    picks.append(make_dynkin_quiver(n, [(min(u, v), max(u, v)) for u, v in edges]))
    seen, out = set(), []
    for q in picks:
        if q.arrows not in seen:
            seen.add(q.arrows)
            out.append(q)
        if len(out) == count:
            break
    return out


# -- forms and heights --------------------------------------------------------

def euler_form(q: DynkinQuiver, x, y) -> int:
    """<x,y> = sum_i x_i y_i - sum_(s->t) x_s y_t on dimension vectors.

    Dimension vectors are indexed 1..n; tuples are read with offset 1 and
    dicts are read directly (missing keys count as 0).
    """
    xi = _coords(q, x)
    yi = _coords(q, y)
    total = sum(xi[i] * yi[i] for i in q.vertices)
    for s, t in q.arrows:
        total -= xi[s] * yi[t]
    return total


def _coords(q: DynkinQuiver, x) -> dict[int, int]:
    if isinstance(x, dict):
        return {i: x.get(i, 0) for i in q.vertices}
    return {i: x[i - 1] for i in q.vertices}


def cartan_entry(q: DynkinQuiver, i: int, j: int) -> int:
    """a_ij = <e_i,e_j> + <e_j,e_i>: 2 on the diagonal, -1 for adjacency, else 0."""
    ei = unit_vector(q, i)
    ej = unit_vector(q, j)
    return euler_form(q, ei, ej) + euler_form(q, ej, ei)


def unit_vector(q: DynkinQuiver, i: int) -> tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in q.vertices)


def height_function(q: DynkinQuiver) -> dict[int, int]:
    """The canonical integer height lift: xi(1) = 0, xi(s) = xi(t) + 1 per arrow s->t."""
    xi = {1: 0}
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in q.vertices}
    for s, t in q.arrows:
        adj[s].append((t, -1))
        adj[t].append((s, +1))
    frontier = [1]
    while frontier:
        x = frontier.pop()
        for y, step in adj[x]:
            if y not in xi:
                xi[y] = xi[x] + step
                frontier.append(y)
    return xi


def euler_matrix(q: DynkinQuiver) -> tuple[tuple[int, ...], ...]:
    """The matrix E with E[i][j] = <e_i, e_j>, rows/cols 0-indexed."""
    rows = []
    for i in q.vertices:
        ei = unit_vector(q, i)
        rows.append(tuple(euler_form(q, ei, unit_vector(q, j)) for j in q.vertices))
    return tuple(rows)
