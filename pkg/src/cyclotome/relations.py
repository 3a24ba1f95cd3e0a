"""Machine verification of the Chevalley-generator relations.

Every check is an exact equality of integers, half-integers, or formal sums;
nothing is tolerance-based.  The products that appear are assembled from their
proven basis decompositions (leading-term exponents from the d form, the
product twist from the antisymmetrized Euler pairing), so each verifier both
recomputes the inputs of those decompositions and confirms the algebraic
identity they imply.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclic import CycIndex
from .derived import DerivedObject
from .dominance import (
    VWPair,
    canonical_order,
    enumerate_l_dominant,
    iota,
    residual,
    v_f,
    v_sigma_f,
    w_f,
    _add,
    _scale,
)
from .forms import (
    HalfInt,
    d_form,
    euler_a,
    hl_extension,
    leading_exponent,
    leading_exponent_tilde,
    phi,
    twist_exponent,
    window_height,
)
from .laurent import FormalSum, HalfLaurent, T, T_INV
from .quiver import cartan_entry, euler_form, unit_vector


class CaseMismatchError(ValueError):
    pass


@dataclass
class Check:
    name: str
    computed: object
    expected: object

    @property
    def passed(self) -> bool:
        return self.computed == self.expected

    def to_dict(self):
        return {
            "name": self.name,
            "computed": repr(self.computed),
            "expected": repr(self.expected),
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    relation: str
    dynkin_type: str
    orientation: str
    args: tuple
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, computed, expected):
        self.checks.append(Check(name, computed, expected))

    def to_dict(self):
        return {
            "relation": self.relation,
            "type": self.dynkin_type,
            "orientation": self.orientation,
            "args": list(self.args),
            "checks": [c.to_dict() for c in self.checks],
            "pass": self.passed,
        }


def _report(index: CycIndex, relation: str, args) -> VerificationReport:
    q = index.quiver
    return VerificationReport(relation, q.dynkin_type, q.orientation_label(), tuple(args))


# -- generator pairs ---------------------------------------------------------------

def e_pair(index: CycIndex, i: int) -> VWPair:
    return VWPair({}, index.e_sigma_slot(index.ar.simple[i]))


def f_pair(index: CycIndex, i: int) -> VWPair:
    s = index.vertex_of_slot[index.ar.simple[i]]
    return VWPair({}, {index.sigma(index.shift_vertex(s)): 1})


def k_prime_pair(index: CycIndex, i: int) -> VWPair:
    return VWPair(v_f(index, i), w_f(index, i))


def k_pair(index: CycIndex, i: int) -> VWPair:
    return VWPair(v_sigma_f(index, i), w_f(index, i))


def central_pair(index: CycIndex, i: int) -> VWPair:
    return VWPair(
        _add(v_f(index, i), v_sigma_f(index, i)), _scale(w_f(index, i), 2)
    )


def chevalley_generators(index: CycIndex) -> dict[str, VWPair]:
    out = {}
    for i in index.quiver.vertices:
        out[f"E{i}"] = e_pair(index, i)
        out[f"K'{i}"] = k_prime_pair(index, i)
        out[f"K{i}"] = k_pair(index, i)
        out[f"F{i}"] = f_pair(index, i)
    return out


def _simple_obj(index: CycIndex, i: int) -> DerivedObject:
    return DerivedObject(index.ar.simple[i], 0)


def _hom(index, i, j, gap=0) -> int:
    return index.ar.hom_dim(_simple_obj(index, i), DerivedObject(index.ar.simple[j], gap))


def _twisted_commutation_exponent(index, m1: VWPair, m2: VWPair) -> HalfInt:
    """Exponent X with m1 x m2 = t^X m2 x m1 on the leading terms (twisted)."""
    return HalfInt(
        4 * leading_exponent_tilde(index, m1, m2)
    ) + 2 * twist_exponent(index, m1.w, m2.w)


def _only_dominant_above(index, w, floor) -> bool:
    """True when the only l-dominant v >= floor for this w is floor itself."""
    floor = dict(floor)
    for v in enumerate_l_dominant(index, w):
        if all(v.get(k, 0) >= c for k, c in floor.items()) and v != floor:
            return False
    return floor in enumerate_l_dominant(index, w)


# -- EK --------------------------------------------------------------------------

def verify_ek(index: CycIndex, i: int, j: int) -> VerificationReport:
    """The four relations between E_i/F_i and the Cartan generators K_j/K'_j."""
    rep = _report(index, "ek", (i, j))
    q = index.quiver
    eij = euler_form(q, unit_vector(q, i), unit_vector(q, j))
    eji = euler_form(q, unit_vector(q, j), unit_vector(q, i))
    aij = cartan_entry(q, i, j)

    relations = [
        ("E,K'", e_pair(index, i), k_prime_pair(index, j), 2 * eij, aij),
        ("E,K", e_pair(index, i), k_pair(index, j), -2 * eji, -aij),
        ("F,K'", f_pair(index, i), k_prime_pair(index, j), -2 * eji, -aij),
        ("F,K", f_pair(index, i), k_pair(index, j), 2 * eij, aij),
    ]
    for name, m1, m2, tilde_expected, twisted_expected in relations:
        w_total = _add(m1.w, m2.w)
        rep.add(
            f"{name}: single leading term",
            _only_dominant_above(index, w_total, m2.v),
            True,
        )
        rep.add(
            f"{name}: tilde exponent",
            2 * leading_exponent_tilde(index, m1, m2),
            tilde_expected,
        )
        rep.add(
            f"{name}: twisted exponent",
            _twisted_commutation_exponent(index, m1, m2),
            HalfInt.of(twisted_expected),
        )

    # The d-value identities behind the first two relations.
    m_e, m_kp, m_k = e_pair(index, i), k_prime_pair(index, j), k_pair(index, j)
    rep.add("d(E,K') = hom(S_i, Sigma S_j)", d_form(index, m_e, m_kp), _hom(index, i, j, 1))
    rep.add("d(K',E) = hom(S_i, S_j)", d_form(index, m_kp, m_e), _hom(index, i, j, 0))
    rep.add("d(E,K) = hom(S_i, S_j)", d_form(index, m_e, m_k), _hom(index, i, j, 0))
    rep.add("d(K,E) = hom(S_j, Sigma S_i)", d_form(index, m_k, m_e), _hom(index, j, i, 1))

    # Shift symmetry: relations 3/4 are the shift transports of 2/1.
    sp = lambda m: VWPair(index.shift_pullback(m.v), index.shift_pullback(m.w))
    rep.add(
        "F,K is the transport of E,K'",
        (sp(e_pair(index, i)), sp(k_prime_pair(index, j))),
        (f_pair(index, i), k_pair(index, j)),
    )
    rep.add(
        "d is shift-invariant on E,K'",
        d_form(index, sp(m_e), sp(m_kp)),
        d_form(index, m_e, m_kp),
    )
    return rep


# -- EF --------------------------------------------------------------------------

def verify_ef(index: CycIndex, i: int, j: int) -> VerificationReport:
    """[E_i, F_j] = delta_ij (t - t^-1)(K'_i-label - K_i-label)."""
    rep = _report(index, "ef", (i, j))
    m_e, m_f = e_pair(index, i), f_pair(index, j)
    w_total = _add(m_e.w, m_f.w)
    rep.add(
        "twist vanishes between E and F weights",
        twist_exponent(index, m_e.w, m_f.w),
        HalfInt.of(0),
    )
    if i != j:
        rep.add("only l-dominant v is 0", enumerate_l_dominant(index, w_total), [{}])
        rep.add("d(E,F) = 0", d_form(index, m_e, m_f), 0)
        rep.add("d(F,E) = 0", d_form(index, m_f, m_e), 0)
        ef = FormalSum.of(VWPair({}, w_total), HalfLaurent.t_pow(leading_exponent(index, m_e, m_f)))
        fe = FormalSum.of(VWPair({}, w_total), HalfLaurent.t_pow(leading_exponent(index, m_f, m_e)))
        rep.add("commutator vanishes", ef - fe, FormalSum())
        return rep

    vf, vsf, wf = v_f(index, i), v_sigma_f(index, i), w_f(index, i)
    rep.add(
        "l-dominant v for w^f are 0, v^f, v^Sigma f",
        enumerate_l_dominant(index, wf),
        canonical_order([{}, vf, vsf]),
    )
    # Leading shifts of the three restriction summands, recomputed from d.
    pe, pf = VWPair({}, m_e.w), VWPair({}, m_f.w)

    def shift_of(v1: dict, v2: dict) -> int:
        a = VWPair(v1, m_e.w)
        b = VWPair(v2, m_f.w)
        return d_form(index, b, a) - d_form(index, a, b)

    def shift_rev(v1: dict, v2: dict) -> int:
        a = VWPair(v1, m_f.w)
        b = VWPair(v2, m_e.w)
        return d_form(index, b, a) - d_form(index, a, b)

    ef_vf, ef_vsf, ef_0 = shift_of(vf, {}), shift_of(vsf, {}), shift_of({}, {})
    fe_vf, fe_vsf = shift_rev(vf, {}), shift_rev(vsf, {})
    rep.add("EF shifts at v^f, v^Sigma f, 0", (ef_vf, ef_vsf, ef_0), (1, -1, 0))
    rep.add("FE shifts at v^f, v^Sigma f", (fe_vf, fe_vsf), (-1, 1))

    l0 = VWPair({}, wf)
    lkp = VWPair(vf, wf)
    lk = VWPair(vsf, wf)
    ef_sum = (
        FormalSum.of(l0, HalfLaurent.t_pow(ef_0))
        + FormalSum.of(lkp, HalfLaurent.t_pow(ef_vf))
        + FormalSum.of(lk, HalfLaurent.t_pow(ef_vsf))
    )
    fe_sum = (
        FormalSum.of(l0)
        + FormalSum.of(lkp, HalfLaurent.t_pow(fe_vf))
        + FormalSum.of(lk, HalfLaurent.t_pow(fe_vsf))
    )
    expected = (FormalSum.of(lkp) - FormalSum.of(lk)).scale(T - T_INV)
    rep.add("[E,F] = (t - t^-1)(K' - K) labels", ef_sum - fe_sum, expected)
    return rep


# -- KK --------------------------------------------------------------------------

def verify_kk(index: CycIndex, i: int, j: int) -> VerificationReport:
    """Products of Cartan generators: tilde exponents and trivialized twists."""
    rep = _report(index, "kk", (i, j))
    q = index.quiver
    eij = euler_form(q, unit_vector(q, i), unit_vector(q, j))
    eji = euler_form(q, unit_vector(q, j), unit_vector(q, i))

    kp_i, kp_j = k_prime_pair(index, i), k_prime_pair(index, j)
    k_i, k_j = k_pair(index, i), k_pair(index, j)
    w_total = _add(kp_i.w, kp_j.w)

    leaders = [
        _add(kp_i.v, kp_j.v),
        _add(kp_i.v, k_j.v),
        _add(k_i.v, kp_j.v),
        _add(k_i.v, k_j.v),
    ]
    no_excess = True
    for v in enumerate_l_dominant(index, w_total):
        for lead in leaders:
            if v != lead and all(v.get(k, 0) >= c for k, c in lead.items()):
                no_excess = False
    rep.add("no l-dominant v strictly above a leading vector", no_excess, True)

    rep.add(
        "d(K'_i,K'_j) = hom + ext",
        d_form(index, kp_i, kp_j),
        _hom(index, i, j, 0) + _hom(index, i, j, 1),
    )
    for name, m1, m2 in (
        ("K'K'", kp_i, kp_j),
        ("K'K", kp_i, k_j),
        ("KK", k_i, k_j),
    ):
        rep.add(
            f"{name}: tilde exponent",
            leading_exponent_tilde(index, m1, m2),
            eij - eji,
        )
        rep.add(
            f"{name}: twisted exponent",
            HalfInt(2 * leading_exponent_tilde(index, m1, m2))
            + twist_exponent(index, m1.w, m2.w),
            HalfInt.of(0),
        )
    sp = lambda m: VWPair(index.shift_pullback(m.v), index.shift_pullback(m.w))
    rep.add(
        "KK is the transport of K'K'",
        (sp(kp_i), sp(kp_j)),
        (k_i, k_j),
    )
    return rep


# -- quantum Serre ------------------------------------------------------------------

def verify_serre(index: CycIndex, i: int, j: int) -> VerificationReport:
    """The cubic Serre relation for adjacent i, j; commutation otherwise."""
    if i == j:
        raise CaseMismatchError("Serre relation needs i != j")
    rep = _report(index, "serre", (i, j))
    q = index.quiver
    adjacent = q.adjacent(i, j)

    m_ei, m_ej = e_pair(index, i), e_pair(index, j)
    w_prime = _add(m_ei.w, m_ej.w)

    if not adjacent:
        rep.add("case", "commuting", "commuting")
        rep.add("only l-dominant v is 0", enumerate_l_dominant(index, w_prime), [{}])
        rep.add("d(E_i,E_j) = 0", d_form(index, m_ei, m_ej), 0)
        rep.add("d(E_j,E_i) = 0", d_form(index, m_ej, m_ei), 0)
        rep.add(
            "twisted commutation exponent",
            _twisted_commutation_exponent(index, m_ei, m_ej),
            HalfInt.of(0),
        )
        lbl = VWPair({}, w_prime)
        ij = FormalSum.of(lbl, HalfLaurent.t_pow(leading_exponent(index, m_ei, m_ej)))
        ji = FormalSum.of(lbl, HalfLaurent.t_pow(leading_exponent(index, m_ej, m_ei)))
        rep.add("commutator vanishes", ij - ji, FormalSum())
        return rep

    # delta = 1 precisely when tau S_j = S_i inside the module category.
    tau_sj = index.ar.tau(_simple_obj(index, j))
    delta = 1 if tau_sj == _simple_obj(index, i) else 0
    chi = euler_a(
        index,
        phi(index, m_ei.w),
        phi(index, m_ej.w),
    )
    # chi is pinned by the case; delta = [tau S_j = S_i] additionally needs the
    # almost-split sequence ending at S_j to have simple middle term, which
    # holds in particular for A2 but is not orientation-universal.
    if _hom(index, j, i, 1) == 1:
        rep.add("case (i): chi", chi, 1)
        rep.add("case (i): delta is boolean", delta in (0, 1), True)
    elif _hom(index, i, j, 1) == 1:
        rep.add("case (ii): (delta, chi)", (delta, chi), (0, -1))
    else:
        raise CaseMismatchError(f"vertices {i}, {j} adjacent but no extension found")

    v_si = index.e_slot(index.ar.simple[i])
    w_full = _add(_scale(m_ei.w, 2), m_ej.w)
    p1 = VWPair(v_si, m_ei.w)
    p2 = m_ej
    p3 = VWPair({}, w_prime)
    p4 = m_ei
    p5 = VWPair(v_si, w_prime)
    for name, a, b, expected in (
        ("d((e_Si,e_sigmaSi),(0,e_sigmaSj))", p1, p2, 0),
        ("d((0,e_sigmaSj),(e_Si,e_sigmaSi))", p2, p1, delta),
        ("d((e_Si,e_sigmaSi),(0,w'))", p1, p3, 1),
        ("d((0,w'),(e_Si,e_sigmaSi))", p3, p1, delta),
        ("d((0,e_sigmaSi),(e_Si,w'))", p4, p5, 0),
        ("d((e_Si,w'),(0,e_sigmaSi))", p5, p4, 1),
    ):
        rep.add(name, d_form(index, a, b), expected)

    # Twist scalars for the five ordered weight pairs are all t^(-chi/2).
    half_neg_chi = HalfInt(-chi)
    for name, w1, w2 in (
        ("A", m_ei.w, m_ej.w),
        ("B", m_ei.w, m_ej.w),
        ("C", m_ei.w, w_prime),
        ("D", m_ei.w, w_prime),
        ("E", m_ei.w, w_prime),
    ):
        rep.add(f"twist scalar {name}", twist_exponent(index, w1, w2), half_neg_chi)

    # Assemble the six proven product decompositions with opaque labels and
    # expand the Serre combination.
    a_scalar = HalfLaurent.t_pow(half_neg_chi)
    a_inv = HalfLaurent.t_pow(HalfInt(chi))
    lbl_s = VWPair({}, m_ej.w)
    lbl_pp = VWPair({}, w_prime)
    lbl_qp = VWPair(v_si, w_prime)
    lbl_p = VWPair({}, w_full)
    lbl_q = VWPair(v_si, w_full)
    t_pow = HalfLaurent.t_pow

    def left_u(fs: FormalSum) -> FormalSum:
        out = FormalSum()
        for key, coeff in fs.terms.items():
            if key == lbl_s:
                out = out + FormalSum.of(lbl_pp, coeff * a_scalar)
                out = out + FormalSum.of(lbl_qp, coeff * a_scalar * t_pow(delta))
            elif key == lbl_pp:
                out = out + FormalSum.of(lbl_p, coeff * a_scalar)
                out = out + FormalSum.of(lbl_q, coeff * a_scalar * t_pow(delta - 1))
            elif key == lbl_qp:
                out = out + FormalSum.of(lbl_q, coeff * a_scalar * T)
            else:
                raise AssertionError(f"unexpected label {key}")
        return out

    def right_u(fs: FormalSum) -> FormalSum:
        out = FormalSum()
        for key, coeff in fs.terms.items():
            if key == lbl_s:
                out = out + FormalSum.of(lbl_pp, coeff * a_inv)
                out = out + FormalSum.of(lbl_qp, coeff * a_inv * t_pow(-delta))
            elif key == lbl_pp:
                out = out + FormalSum.of(lbl_p, coeff * a_inv)
                out = out + FormalSum.of(lbl_q, coeff * a_inv * t_pow(1 - delta))
            elif key == lbl_qp:
                out = out + FormalSum.of(lbl_q, coeff * a_inv * T_INV)
            else:
                raise AssertionError(f"unexpected label {key}")
        return out

    start = FormalSum.of(lbl_s)
    uus = left_u(left_u(start))
    usu_a = left_u(right_u(start))
    usu_b = right_u(left_u(start))
    suu = right_u(right_u(start))
    rep.add("middle product is associative", usu_a, usu_b)
    combo = uus - usu_a.scale(T + T_INV) + suu
    rep.add("q-Serre combination vanishes", combo, FormalSum())
    return rep


# -- section 5 identities -------------------------------------------------------------

def verify_same_form(index: CycIndex) -> VerificationReport:
    """The comparison identity between the pair form on lifts and the
    height-signed symmetrized Euler form, over every eligible ordered pair."""
    rep = _report(index, "same-form", ())
    ar = index.ar
    lifts = {m: iota(index, m) for m in ar.modules}
    failures = []
    pairs = 0
    for m in ar.modules:
        for n in ar.modules:
            if m == n or window_height(index, m) > window_height(index, n):
                continue
            pairs += 1
            im, in_ = lifts[m], lifts[n]
            rm, rn = ar.root_of[m], ar.root_of[n]
            lhs = HalfInt(
                2 * (d_form(index, in_, im) - d_form(index, im, in_))
                + (euler_form(index.quiver, rn, rm) - euler_form(index.quiver, rm, rn))
            )
            rhs = HalfInt(
                euler_form(index.quiver, rm, rn) + euler_form(index.quiver, rn, rm)
            )
            if lhs != rhs:
                failures.append((m, n, lhs, rhs))
    rep.add(f"identity holds on all {pairs} eligible ordered pairs", failures, [])
    equal_height = [
        (m, n)
        for m in ar.modules
        for n in ar.modules
        if m != n and window_height(index, m) == window_height(index, n)
    ]
    bad = [
        (m, n)
        for m, n in equal_height
        if euler_form(index.quiver, ar.root_of[m], ar.root_of[n])
        + euler_form(index.quiver, ar.root_of[n], ar.root_of[m])
        != 0
    ]
    rep.add("equal heights force (M,N) = 0", bad, [])
    return rep


def verify_same_n(index: CycIndex, mass_cap: int = 3) -> VerificationReport:
    """The pair-level comparison form equals half its weight-level extension
    on all l-dominant pairs in V+ x W^S of mass <= mass_cap."""
    from .forms import script_n
    from itertools import product as iproduct

    rep = _report(index, "same-n", (mass_cap,))
    verts = list(index.quiver.vertices)
    pool: list[VWPair] = []
    for masses in iproduct(range(mass_cap + 1), repeat=len(verts)):
        if sum(masses) > mass_cap:
            continue
        w = {}
        for i, mult in zip(verts, masses):
            if mult:
                w[index.sigma(index.vertex_of_slot[index.ar.simple[i]])] = mult
        for v in enumerate_l_dominant(index, w):
            pool.append(VWPair(v, w))
    failures = []
    for m1 in pool:
        for m2 in pool:
            lhs = script_n(index, m1, m2)
            rhs = HalfInt(hl_extension(index, residual(index, m1), residual(index, m2)))
            if lhs != rhs:
                failures.append((m1, m2, lhs, rhs))
    rep.add(f"identity holds on all {len(pool)}^2 ordered pairs", failures, [])
    return rep


# -- the exponent dictionary -----------------------------------------------------------

def chevalley_exponent_table(index: CycIndex) -> VerificationReport:
    """The generator dictionary and the fully twisted relation exponents.

    Confirms the EK rows reproduce t^(a_ij), the EF scalar bookkeeping closes,
    the KK rows commute exactly, and the Cartan products of weight 2w^f have
    vanishing twisted commutation exponents against every generator.
    """
    rep = _report(index, "exponent-table", ())
    q = index.quiver
    scalar_e = T_INV - T        # label = (t^-1 - t) E_i
    scalar_f = T - T_INV        # label = (t - t^-1) F_i
    one = HalfLaurent.from_int(1)
    rep.add("dictionary scalar on E: (1 - t^2)/t", scalar_e, (one - T * T) * T_INV)
    rep.add("dictionary scalar on F: (t^2 - 1)/t", scalar_f, (T * T - one) * T_INV)
    rep.add(
        "EF scalar identity: c_E c_F = -(t - t^-1)^2",
        scalar_e * scalar_f,
        -((T - T_INV) * (T - T_INV)),
    )
    for i in q.vertices:
        for j in q.vertices:
            aij = cartan_entry(q, i, j)
            # X(g, K) is the exponent in g x K = t^X K x g; the dictionary rows
            # state K x g = t^(-X) g x K.
            rows = [
                (f"K{i} E{j} = t^a_ij E{j} K{i}", e_pair(index, j), k_pair(index, i), aij),
                (f"K{i} F{j} = t^-a_ij F{j} K{i}", f_pair(index, j), k_pair(index, i), -aij),
                (f"K'{i} E{j} = t^-a_ij E{j} K'{i}", e_pair(index, j), k_prime_pair(index, i), -aij),
                (f"K'{i} F{j} = t^a_ij F{j} K'{i}", f_pair(index, j), k_prime_pair(index, i), aij),
            ]
            for name, g, kgen, expected in rows:
                rep.add(
                    name,
                    -_twisted_commutation_exponent(index, g, kgen),
                    HalfInt.of(expected),
                )
            rep.add(
                f"[K{i}, K'{j}] = 0 exponent",
                _twisted_commutation_exponent(index, k_pair(index, i), k_prime_pair(index, j)),
                HalfInt.of(0),
            )
        ef = verify_ef(index, i, i)
        rep.add(f"EF reduction at {i} passes", ef.passed, True)
    generators = chevalley_generators(index)
    for i in q.vertices:
        central = central_pair(index, i)
        for name, g in generators.items():
            rep.add(
                f"center {i} commutes with {name}",
                _twisted_commutation_exponent(index, central, g),
                HalfInt.of(0),
            )
    return rep


# -- driver ------------------------------------------------------------------------------

def verify_all(index: CycIndex, mass_cap: int = 3) -> list[VerificationReport]:
    reports = []
    verts = list(index.quiver.vertices)
    for i in verts:
        for j in verts:
            reports.append(verify_ek(index, i, j))
            reports.append(verify_ef(index, i, j))
            reports.append(verify_kk(index, i, j))
            if i != j:
                reports.append(verify_serre(index, i, j))
    reports.append(verify_same_form(index))
    reports.append(verify_same_n(index, mass_cap))
    reports.append(chevalley_exponent_table(index))
    reports.sort(key=lambda r: (r.relation, r.args))
    return reports
