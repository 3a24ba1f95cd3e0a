"""l-dominant pairs: the W/V cones, Cartan vectors, triangular decomposition,
the module lift iota, and complete enumeration.

A pair (v, w) of nonnegative vectors (v on sigma-I-hat, w on I-hat) is
l-dominant when w - C_q v >= 0 coordinatewise; these pairs index the nonempty
strata.  For w supported on the sigma(S_i) and sigma(Sigma S_i) vertices the
full solution set factors through a triangular decomposition: a Kostant
partition on the module side, its shift image on the other side, and a free
choice of Cartan coefficients in between.  The enumerator walks that structure
and can be cross-checked against a capped brute-force search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .cyclic import CycIndex, Vertex
from .derived import DerivedObject, Slot


class NotDominantError(ValueError):
    pass


class DecompositionFailureError(RuntimeError):
    pass


class NotInWPlusError(ValueError):
    pass


class UnsupportedWeightError(ValueError):
    pass


class EnumerationMismatchError(RuntimeError):
    """Structural enumerator and brute-force search disagree."""


def _canon(vec: dict[Vertex, int]) -> dict[Vertex, int]:
    return {k: int(c) for k, c in sorted(vec.items()) if c}


def canonical_order(vecs) -> list[dict[Vertex, int]]:
    """Sort sparse vectors deterministically (by their sorted item tuples)."""
    return [dict(items) for items in sorted(tuple(_canon(v).items()) for v in vecs)]


def _add(*vecs: dict[Vertex, int]) -> dict[Vertex, int]:
    out: dict[Vertex, int] = {}
    for vec in vecs:
        for k, c in vec.items():
            out[k] = out.get(k, 0) + c
    return _canon(out)


def _sub(a: dict[Vertex, int], b: dict[Vertex, int]) -> dict[Vertex, int]:
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) - c
    return {k: c for k, c in out.items() if c}


def _scale(vec: dict[Vertex, int], m: int) -> dict[Vertex, int]:
    return {k: c * m for k, c in vec.items() if c * m}


class VWPair:
    """A pair of finitely supported nonnegative vectors (v, w)."""

    __slots__ = ("v", "w", "_key")

    def __init__(self, v: dict[Vertex, int], w: dict[Vertex, int]):
        self.v = _canon(v)
        self.w = _canon(w)
        if any(c < 0 for c in self.v.values()) or any(c < 0 for c in self.w.values()):
            raise ValueError("VWPair entries must be nonnegative")
        self._key = (tuple(self.v.items()), tuple(self.w.items()))

    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, VWPair) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return hash(self._key)

    def __add__(self, other: "VWPair") -> "VWPair":
        return VWPair(_add(self.v, other.v), _add(self.w, other.w))

    def mass(self) -> int:
        return sum(self.w.values())

    def __repr__(self):
        return f"VWPair(v={self.v}, w={self.w})"

    def pretty(self, index: CycIndex) -> str:
        def side(vec):
            if not vec:
                return "0"
            return " + ".join(
                (f"{c}*" if c != 1 else "") + f"e[{index.vertex_name(k)}]"
                for k, c in vec.items()
            )

        return f"({side(self.v)}, {side(self.w)})"


ZERO_PAIR = VWPair({}, {})


@dataclass(frozen=True)
class Cones:
    """Basis vertices of the W/V cones and the generators of the Cartan blocks."""

    w_plus: frozenset[Vertex]
    v_plus: frozenset[Vertex]
    w_s: frozenset[Vertex]
    w_minus: frozenset[Vertex]
    v_minus: frozenset[Vertex]
    w_sigma_s: frozenset[Vertex]


def cones(index: CycIndex) -> Cones:
    ar = index.ar
    module_vertices = {index.vertex_of_slot[s] for s in ar.modules}
    shifted_vertices = set(index.sigma_i_hat) - module_vertices
    noninj = {
        index.vertex_of_slot[s] for s in ar.modules if not ar.is_injective(s)
    }
    w_plus = frozenset(index.sigma(v) for v in module_vertices)
    w_minus = frozenset(index.sigma(v) for v in shifted_vertices)
    w_s = frozenset(
        index.sigma(index.vertex_of_slot[ar.simple[i]]) for i in index.quiver.vertices
    )
    w_sigma_s = frozenset(
        index.sigma(index.shift_vertex(index.vertex_of_slot[ar.simple[i]]))
        for i in index.quiver.vertices
    )
    v_minus = frozenset(index.shift_vertex(v) for v in noninj)
    return Cones(w_plus, frozenset(noninj), w_s, w_minus, v_minus, w_sigma_s)


# -- Cartan vectors -------------------------------------------------------------

def w_f(index: CycIndex, i: int) -> dict[Vertex, int]:
    """w^f_i = e_{sigma S_i} + e_{sigma Sigma S_i}."""
    s = index.vertex_of_slot[index.ar.simple[i]]
    return _add(
        {index.sigma(s): 1},
        {index.sigma(index.shift_vertex(s)): 1},
    )


def v_f(index: CycIndex, i: int) -> dict[Vertex, int]:
    """v^f_i: Hom dimensions from S_i into every section object."""
    ar = index.ar
    si = DerivedObject(ar.simple[i], 0)
    out = {}
    for v in index.sigma_i_hat:
        val = ar.hom_dim(si, index.object_at(v))
        if val:
            out[v] = val
    return _canon(out)


def v_sigma_f(index: CycIndex, i: int) -> dict[Vertex, int]:
    return index.shift_pullback(v_f(index, i))


# -- dominance -------------------------------------------------------------------

def validate_pair(index: CycIndex, pair: VWPair) -> VWPair:
    """Enforce the index-set discipline: v on sigma-I-hat, w on I-hat."""
    index.assert_v_vector(pair.v)
    index.assert_w_vector(pair.w)
    return pair


def residual(index: CycIndex, pair: VWPair) -> dict[Vertex, int]:
    """w - C_q v as a signed vector on I-hat."""
    index.assert_w_vector(pair.w)
    return _sub(pair.w, index.q_cartan_apply(pair.v))


def is_l_dominant(index: CycIndex, pair: VWPair) -> bool:
    return all(c >= 0 for c in residual(index, pair).values())


def decompose(index: CycIndex, pair: VWPair) -> tuple[VWPair, VWPair, VWPair]:
    """Split an l-dominant pair into its positive, Cartan and negative parts.

    Requires w supported on the sigma(S_i) / sigma(Sigma S_i) vertices; the
    Cartan coefficients are read off the injective coordinates of v, and the
    three parts are themselves l-dominant with w^0 - C_q v^0 = 0.
    """
    co = cones(index)
    if any(k not in co.w_s and k not in co.w_sigma_s for k in pair.w):
        raise UnsupportedWeightError("w is not supported on W^S + W^SigmaS")
    if not is_l_dominant(index, pair):
        raise NotDominantError(f"{pair!r} is not l-dominant")

    ar = index.ar
    b, bp = {}, {}
    for i in index.quiver.vertices:
        inj_vertex = index.vertex_of_slot[ar.injective[i]]
        b[i] = pair.v.get(inj_vertex, 0)
        bp[i] = pair.v.get(index.shift_vertex(inj_vertex), 0)
    v0 = _add(
        *[_scale(v_f(index, i), b[i]) for i in index.quiver.vertices],
        *[_scale(v_sigma_f(index, i), bp[i]) for i in index.quiver.vertices],
    )
    w0 = _add(*[_scale(w_f(index, i), b[i] + bp[i]) for i in index.quiver.vertices])

    diff = _sub(pair.v, v0)
    v_plus = {k: c for k, c in diff.items() if k in co.v_plus}
    v_minus = {k: c for k, c in diff.items() if k in co.v_minus}
    if _add(v_plus, v_minus) != _canon(diff):
        raise DecompositionFailureError("v - v0 is not supported on V+ and V-")

    w_rem = _sub(pair.w, w0)
    w_plus = {k: c for k, c in w_rem.items() if k in co.w_plus}
    w_minus = {k: c for k, c in w_rem.items() if k in co.w_minus}
    if _add(w_plus, w_minus) != _canon(w_rem):
        raise DecompositionFailureError("w - w0 left the W+ / W- supports")

    parts = []
    for vv, ww in ((v_plus, w_plus), (v0, w0), (v_minus, w_minus)):
        if any(c < 0 for c in vv.values()) or any(c < 0 for c in ww.values()):
            raise DecompositionFailureError("a component went negative")
        part = VWPair(vv, ww)
        if not is_l_dominant(index, part):
            raise DecompositionFailureError(f"component {part!r} is not l-dominant")
        parts.append(part)
    if any(residual(index, parts[1]).values()):
        raise DecompositionFailureError("Cartan part has nonzero residual")
    if parts[0] + parts[1] + parts[2] != pair:
        raise DecompositionFailureError("components do not recombine")
    return tuple(parts)


# -- the module lift -------------------------------------------------------------

def iota(index: CycIndex, slot: Slot) -> VWPair:
    """The l-dominant lift of an indecomposable module N: w - C_q v = e_{sigma N}."""
    ar = index.ar
    root = ar.root_of[slot]
    iw: dict[Vertex, int] = {}
    for i in index.quiver.vertices:
        if root[i - 1]:
            iw[index.sigma(index.vertex_of_slot[ar.simple[i]])] = root[i - 1]
    iv: dict[Vertex, int] = {}
    n_obj = DerivedObject(slot, 0)
    for x in ar.modules:
        tx = ar.tau_inv(DerivedObject(x, 0))
        val = sum(
            root[i - 1] * ar.hom_dim(tx, DerivedObject(ar.simple[i], 0))
            for i in index.quiver.vertices
        ) - ar.hom_dim(tx, n_obj)
        assert val >= 0, "iota_V went negative"
        if val:
            iv[index.vertex_of_slot[x]] = val
    return VWPair(iv, iw)


def iota_additive(index: CycIndex, multiset) -> VWPair:
    """iota summed over a multiset of module slots (iterable of (slot, mult))."""
    total = ZERO_PAIR
    for slot, mult in multiset:
        part = iota(index, slot)
        total = total + VWPair(_scale(part.v, mult), _scale(part.w, mult))
    return total


def solve_w_tilde(index: CycIndex, wtilde: dict[Vertex, int]) -> VWPair:
    """The unique l-dominant pair in V+ x W^S with w - C_q v = wtilde (wtilde in W+)."""
    co = cones(index)
    wtilde = _canon(wtilde)
    if any(c < 0 for c in wtilde.values()) or any(k not in co.w_plus for k in wtilde):
        raise NotInWPlusError("wtilde is not a nonnegative vector in W+")
    multiset = [
        (index.section[index.sigma_inv(y)], mult) for y, mult in wtilde.items()
    ]
    pair = iota_additive(index, multiset)
    assert all(k in co.v_plus for k in pair.v), "lift left V+"
    assert all(k in co.w_s for k in pair.w), "lift left W^S"
    got = _canon(residual(index, pair))
    if got != wtilde:
        raise AssertionError(f"lift residual {got} != {wtilde}")
    return pair


# -- Kostant partitions ------------------------------------------------------------

def positive_roots(index_or_ar) -> list[tuple[int, ...]]:
    ar = getattr(index_or_ar, "ar", index_or_ar)
    return sorted(ar.root_of.values())


def kostant_multisets(index_or_ar, beta: tuple[int, ...]):
    """Yield every multiset of positive roots summing to beta, as root lists."""
    roots = positive_roots(index_or_ar)

    def rec(remaining, start):
        if all(x == 0 for x in remaining):
            yield []
            return
        for idx in range(start, len(roots)):
            r = roots[idx]
            if all(a >= b for a, b in zip(remaining, r)):
                rest = tuple(a - b for a, b in zip(remaining, r))
                for tail in rec(rest, idx):
                    yield [r] + tail

    yield from rec(tuple(beta), 0)


def kostant_partitions(index_or_ar, beta: tuple[int, ...]) -> int:
    """Number of multisets of positive roots summing to beta."""
    if any(x < 0 for x in beta):
        raise ValueError("beta must be nonnegative")
    roots = tuple(positive_roots(index_or_ar))

    @lru_cache(maxsize=None)
    def count(remaining, start):
        if all(x == 0 for x in remaining):
            return 1
        if start == len(roots):
            return 0
        total = count(remaining, start + 1)
        r = roots[start]
        if all(a >= b for a, b in zip(remaining, r)):
            total += count(tuple(a - b for a, b in zip(remaining, r)), start)
        return total

    return count(tuple(beta), 0)


# -- enumeration --------------------------------------------------------------------

def _module_lift_vs(index: CycIndex, beta: tuple[int, ...]) -> list[dict[Vertex, int]]:
    """All v with (v, sum beta_i e_{sigma S_i}) l-dominant: one per Kostant multiset."""
    out = []
    seen = set()
    for multiset in kostant_multisets(index, beta):
        slot_counts: dict[Slot, int] = {}
        for r in multiset:
            slot = index.ar.slot_of_root[r]
            slot_counts[slot] = slot_counts.get(slot, 0) + 1
        pair = iota_additive(index, slot_counts.items())
        key = tuple(pair.v.items())
        if key in seen:
            raise EnumerationMismatchError("two Kostant multisets lifted to one v")
        seen.add(key)
        out.append(pair.v)
    return out


def enumerate_l_dominant(
    index: CycIndex, w: dict[Vertex, int], verify: bool = False
) -> list[dict[Vertex, int]]:
    """The complete set {v >= 0 : w - C_q v >= 0} for w in W^S + W^SigmaS.

    Walks the triangular structure (Kostant lifts on both wings, free Cartan
    coefficients in the middle) and optionally cross-checks a capped
    brute-force search; a mismatch raises EnumerationMismatchError.
    """
    co = cones(index)
    w = _canon(w)
    if any(c < 0 for c in w.values()):
        raise UnsupportedWeightError("w must be nonnegative")
    if any(k not in co.w_s and k not in co.w_sigma_s for k in w):
        raise UnsupportedWeightError("w is not supported on W^S + W^SigmaS")

    verts = list(index.quiver.vertices)
    m = {}
    mp = {}
    for i in verts:
        s = index.vertex_of_slot[index.ar.simple[i]]
        m[i] = w.get(index.sigma(s), 0)
        mp[i] = w.get(index.sigma(index.shift_vertex(s)), 0)

    results: set[tuple] = set()
    expected = 0
    vf = {i: v_f(index, i) for i in verts}
    vsf = {i: v_sigma_f(index, i) for i in verts}
    for c in product(*(range(min(m[i], mp[i]) + 1) for i in verts)):
        cmap = dict(zip(verts, c))
        beta_p = tuple(m[i] - cmap[i] for i in verts)
        beta_m = tuple(mp[i] - cmap[i] for i in verts)
        plus_vs = _module_lift_vs(index, beta_p)
        minus_vs = [index.shift_pullback(v) for v in _module_lift_vs(index, beta_m)]
        cartan_vs = []
        for bs in product(*(range(cmap[i] + 1) for i in verts)):
            bmap = dict(zip(verts, bs))
            cartan_vs.append(
                _add(
                    *[_scale(vf[i], bmap[i]) for i in verts],
                    *[_scale(vsf[i], cmap[i] - bmap[i]) for i in verts],
                )
            )
        expected += len(plus_vs) * len(minus_vs) * len(cartan_vs)
        for vp in plus_vs:
            for vm in minus_vs:
                for v0 in cartan_vs:
                    results.add(tuple(_add(vp, v0, vm).items()))
    if len(results) != expected:
        raise EnumerationMismatchError(
            f"triangular enumeration produced {len(results)} != {expected} pairs"
        )
    out = [dict(items) for items in sorted(results)]
    if verify:
        brute = enumerate_l_dominant_bruteforce(index, w)
        if brute != out:
            raise EnumerationMismatchError(
                f"brute force found {len(brute)} solutions, structure found {len(out)}"
            )
    return out


def enumerate_l_dominant_bruteforce(
    index: CycIndex, w: dict[Vertex, int], cap: int | None = None
) -> list[dict[Vertex, int]]:
    """Capped depth-first search for {v : w - C_q v >= 0}; verification oracle.

    Coordinates are filled in height order; a partial assignment is pruned as
    soon as some w - C_q v coordinate is negative and no unassigned coordinate
    can raise it (only the adjacent-vertex contributions are positive).
    """
    w = _canon(w)
    if cap is None:
        cap = sum(w.values()) * index.h
    coords = sorted(index.sigma_i_hat, key=lambda v: (v[1], v[0]))
    order_pos = {v: k for k, v in enumerate(coords)}

    # raisers[y]: v-coordinates that increase (w - C_q v)(y); only adjacency
    # terms do, so once they are all assigned a negative slack is final.
    raisers: dict[Vertex, list[Vertex]] = {y: [] for y in index.i_hat}
    for x in coords:
        for y, val in index.q_cartan_apply({x: 1}).items():
            if val < 0:
                raisers[y].append(x)
    last_raiser: dict[Vertex, int] = {
        y: max((order_pos[x] for x in xs), default=-1) for y, xs in raisers.items()
    }

    solutions: list[dict[Vertex, int]] = []
    assignment: dict[Vertex, int] = {}

    def slack(partial_v) -> dict[Vertex, int]:
        return _sub(w, index.q_cartan_apply(partial_v))

    def rec(pos: int):
        res = slack(assignment)
        for y, val in res.items():
            if val < 0 and last_raiser[y] < pos:
                return
        if pos == len(coords):
            if all(val >= 0 for val in res.values()):
                solutions.append(dict(assignment))
            return
        x = coords[pos]
        for value in range(cap + 1):
            if value:
                assignment[x] = value
            rec(pos + 1)
        assignment.pop(x, None)

    rec(0)
    return canonical_order(solutions)


def solve_w_tilde_bruteforce(
    index: CycIndex, wtilde: dict[Vertex, int], cap: int | None = None
) -> list[VWPair]:
    """All (v, w) in V+ x W^S with w - C_q v = wtilde, v capped coordinatewise."""
    co = cones(index)
    wtilde = _canon(wtilde)
    if cap is None:
        cap = sum(wtilde.values()) * index.h
    v_coords = sorted(co.v_plus)
    found = []
    for values in product(range(cap + 1), repeat=len(v_coords)):
        v = {x: val for x, val in zip(v_coords, values) if val}
        w = _add(wtilde, index.q_cartan_apply(v))
        if any(c < 0 for c in w.values()):
            continue
        if any(k not in co.w_s for k in w):
            continue
        found.append(VWPair(v, w))
    return sorted(found)
