"""Bilinear forms and exponents: d, the antisymmetrized/symmetrized Euler
pairings on graded classes, the class map Phi, rescaling exponents, the
product twist, the comparison form, and the height order.

All values are exact integers or half-integers.
"""

from __future__ import annotations

from typing import NamedTuple

from .cyclic import CycIndex, Vertex
from .dominance import VWPair, residual
from .derived import Slot
from .quiver import euler_form


class NotIndecomposableError(ValueError):
    pass


class HalfInt:
    """An element of (1/2)Z stored as twice its value; exact arithmetic only."""

    __slots__ = ("twice",)

    def __init__(self, twice: int):
        self.twice = int(twice)

    @classmethod
    def of(cls, value) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        return cls(2 * value)

    def __add__(self, other):
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other):
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __mul__(self, other: int):
        if isinstance(other, HalfInt):
            if other.twice % 2:
                raise ValueError("product would leave (1/2)Z")
            other = other.twice // 2
        return HalfInt(self.twice * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.twice == HalfInt.of(other).twice

    def __lt__(self, other):
        return self.twice < HalfInt.of(other).twice

    def __le__(self, other):
        return self.twice <= HalfInt.of(other).twice

    def __hash__(self):
        return hash(("HalfInt", self.twice))

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __repr__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"


class GradedClass(NamedTuple):
    """A K0-class split into a module part and a shifted part."""

    module_part: tuple[int, ...]
    shifted_part: tuple[int, ...]


def phi(index: CycIndex, w: dict[Vertex, int]) -> GradedClass:
    """Phi(e_{sigma x}) = class of x, routed by whether x is shifted."""
    n = index.quiver.n
    mod = [0] * n
    sh = [0] * n
    for y, c in w.items():
        if y not in index.i_hat:
            raise ValueError(f"{y} is not an I-hat vertex")
        obj = index.object_at(index.sigma_inv(y))
        root = index.ar.root_of[obj.slot]
        target = mod if obj.shift % 2 == 0 else sh
        for k in range(n):
            target[k] += c * root[k]
    return GradedClass(tuple(mod), tuple(sh))


def deg_phi(index: CycIndex, w: dict[Vertex, int]) -> int:
    g = phi(index, w)
    return sum(g.module_part) + sum(g.shifted_part)


def euler_a(index: CycIndex, x: GradedClass, y: GradedClass) -> int:
    """<x,y>_a: the antisymmetrized Euler pairing, part by part."""
    q = index.quiver
    return (
        euler_form(q, x.module_part, y.module_part)
        - euler_form(q, y.module_part, x.module_part)
        + euler_form(q, x.shifted_part, y.shifted_part)
        - euler_form(q, y.shifted_part, x.shifted_part)
    )


def euler_sym(index: CycIndex, x: GradedClass, y: GradedClass) -> int:
    """(x,y): the symmetrized Euler pairing, part by part."""
    q = index.quiver
    return (
        euler_form(q, x.module_part, y.module_part)
        + euler_form(q, y.module_part, x.module_part)
        + euler_form(q, x.shifted_part, y.shifted_part)
        + euler_form(q, y.shifted_part, x.shifted_part)
    )


def n_phi(index: CycIndex, w: dict[Vertex, int]) -> int:
    """N(Phi(w)) = (Phi w, Phi w) - deg Phi(w)."""
    g = phi(index, w)
    return euler_sym(index, g, g) - deg_phi(index, w)


def rescale_exponent_kashiwara(index: CycIndex, w: dict[Vertex, int]) -> HalfInt:
    """Exponent attached to the Kashiwara-normalized basis element of weight w."""
    return HalfInt(n_phi(index, w))


def rescale_exponent_lusztig(index: CycIndex, w: dict[Vertex, int]) -> HalfInt:
    """Exponent for the Lusztig normalization; differs by deg Phi(w)."""
    return HalfInt(n_phi(index, w)) - deg_phi(index, w)


# -- the d form -----------------------------------------------------------------

def d_form(index: CycIndex, m1: VWPair, m2: VWPair) -> int:
    """d(m1, m2) = (w1 - C_q v1) . sigma* v2 + v1 . sigma* w2."""
    res = residual(index, m1)
    total = 0
    for y, c in res.items():
        total += c * m2.v.get(index.sigma(y), 0)
    for x, c in m1.v.items():
        total += c * m2.w.get(index.sigma(x), 0)
    return total


def leading_exponent_tilde(index: CycIndex, m1: VWPair, m2: VWPair) -> int:
    """t-power on the leading term of the untwisted product m1 * m2."""
    return d_form(index, m2, m1) - d_form(index, m1, m2)


def twist_exponent(index: CycIndex, w1: dict[Vertex, int], w2: dict[Vertex, int]) -> HalfInt:
    """-1/2 <Phi(w1), Phi(w2)>_a: the twist attached to the ordered product."""
    return HalfInt(-euler_a(index, phi(index, w1), phi(index, w2)))


def leading_exponent(index: CycIndex, m1: VWPair, m2: VWPair) -> HalfInt:
    """Leading t-power of the twisted product: tilde exponent plus the twist."""
    return HalfInt(2 * leading_exponent_tilde(index, m1, m2)) + twist_exponent(
        index, m1.w, m2.w
    )


def script_n(index: CycIndex, m1: VWPair, m2: VWPair) -> HalfInt:
    """The antisymmetrized comparison form on pairs.

    d(m2,m1) - d(m1,m2) + 1/2 <Phi(w2), Phi(w1)>_a; restricted to lifts of
    modules it computes half the symmetrized Euler form.
    """
    return HalfInt(
        2 * leading_exponent_tilde(index, m1, m2)
        + euler_a(index, phi(index, m2.w), phi(index, m1.w))
    )


# -- height order and the weight-level comparison form ----------------------------

def window_height(index: CycIndex, slot: Slot) -> int:
    """eta(tau^{-d} P_i) = xi(i) + 1 + 2d, as a plain integer."""
    if slot not in index.ar.root_of:
        raise NotIndecomposableError(f"{slot} is not a module slot")
    i, d = slot
    return index.xi[i] + 1 + 2 * d


def q_degree_compare(index: CycIndex, m: Slot, n: Slot) -> int:
    """-1 / 0 / +1 as the height of m is lower / equal / higher than n's."""
    hm = window_height(index, m)
    hn = window_height(index, n)
    return (hm > hn) - (hm < hn)


def hl_form(index: CycIndex, m: Slot, n: Slot) -> int:
    """Height-signed symmetrized Euler form on module basis elements.

    0 on the diagonal; +(M,N) when eta(M) <= eta(N), -(M,N) when
    eta(M) > eta(N).  Equal heights force (M,N) = 0, so the sign convention
    is consistent.
    """
    if m not in index.ar.root_of or n not in index.ar.root_of:
        raise NotIndecomposableError("hl_form takes module slots")
    if m == n:
        return 0
    q = index.quiver
    rm, rn = index.ar.root_of[m], index.ar.root_of[n]
    sym = euler_form(q, rm, rn) + euler_form(q, rn, rm)
    return sym if window_height(index, m) <= window_height(index, n) else -sym


def hl_extension(index: CycIndex, wt1: dict[Vertex, int], wt2: dict[Vertex, int]) -> int:
    """Bilinear extension of hl_form to weight vectors supported on W+."""
    total = 0
    for y1, c1 in wt1.items():
        m = index.section[index.sigma_inv(y1)]
        if m not in index.ar.root_of:
            raise NotIndecomposableError("weight vector leaves W+")
        for y2, c2 in wt2.items():
            n = index.section[index.sigma_inv(y2)]
            if n not in index.ar.root_of:
                raise NotIndecomposableError("weight vector leaves W+")
            total += c1 * c2 * hl_form(index, m, n)
    return total
