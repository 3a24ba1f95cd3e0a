"""Explicit matrix representations and a brute-force Hom oracle.

Indecomposable representations are built from simples by unwinding reflection
functors along an admissible (sinks-first) vertex ordering; Hom dimensions are
then the nullities of the intertwiner systems ``phi_t M_h = N_h phi_s``.  This
path never consults the Euler-form shortcut for Hom, so it serves as an
independent check of the closed formula in derived.py (Ext^1 on the shift-one
gap is recovered as hom - <,>, exact because the category is hereditary).
"""

from __future__ import annotations

from fractions import Fraction

from .derived import ARQuiver, DerivedObject
from .quiver import DynkinQuiver, euler_form


def _topological_sinks_first(n: int, arrows) -> list[int]:
    out = {i: 0 for i in range(1, n + 1)}
    preds = {i: [] for i in range(1, n + 1)}
    for s, t in arrows:
        out[s] += 1
        preds[t].append(s)
    order, ready = [], sorted(i for i in out if out[i] == 0)
    while ready:
        k = ready.pop(0)
        order.append(k)
        for s in preds[k]:
            out[s] -= 1
            if out[s] == 0:
                ready.append(s)
        ready.sort()
    if len(order) != n:
        raise ValueError("quiver has an oriented cycle")
    return order


def _reflect_arrows(arrows, k):
    return tuple((t, s) if s == k or t == k else (s, t) for s, t in arrows)


def _reflect_root(quiver: DynkinQuiver, beta: tuple[int, ...], k: int) -> tuple[int, ...]:
    adj = sum(beta[j - 1] for j in quiver.vertices if quiver.adjacent(j, k))
    out = list(beta)
    out[k - 1] = adj - beta[k - 1]
    return tuple(out)


class Rep:
    """A representation: dims per vertex, one matrix per arrow (rows x cols = target x source)."""

    def __init__(self, arrows, dims, maps):
        self.arrows = tuple(arrows)
        self.dims = dict(dims)
        self.maps = dict(maps)


def _zero_matrix(rows, cols):
    return tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))


def _simple_rep(arrows, n, j) -> Rep:
    dims = {i: (1 if i == j else 0) for i in range(1, n + 1)}
    maps = {(s, t): _zero_matrix(dims[t], dims[s]) for s, t in arrows}
    return Rep(arrows, dims, maps)


def _rref(rows):
    """Row-reduce over Q; returns (reduced rows, pivot column list)."""
    rows = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def matrix_rank(rows) -> int:
    if not rows or not rows[0]:
        return 0
    return len(_rref(rows)[0])


def _cokernel_projection(f_columns, dim_total):
    """A (dim_total - r) x dim_total matrix whose kernel is the span of the columns.

    The quotient coordinates are read off the non-pivot slots after extending a
    basis of the image by standard vectors.
    """
    reduced, pivots = _rref([list(col) for col in f_columns]) if f_columns else ([], [])
    # reduced rows span the image (row space of the transposed column stack)
    basis = [list(r) for r in reduced]
    chosen = []
    for j in range(dim_total):
        cand = [Fraction(1) if i == j else Fraction(0) for i in range(dim_total)]
        if matrix_rank(basis + chosen + [cand]) > len(basis) + len(chosen):
            chosen.append(cand)
    # T columns: image basis then chosen standard vectors; pi = bottom rows of T^{-1}
    t_cols = [list(b) for b in basis] + chosen
    tmat = [[t_cols[j][i] for j in range(dim_total)] for i in range(dim_total)]
    tinv = _invert(tmat)
    return tuple(tuple(tinv[i]) for i in range(len(basis), dim_total))


def _invert(m):
    n = len(m)
    aug = [list(m[i]) + [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for c in range(n):
        pivot = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[pivot] = aug[pivot], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def _reflect_source_minus(rep: Rep, k: int) -> Rep:
    """C_k^- at a source k: replace the space at k by the cokernel of the out-map."""
    out_arrows = sorted((s, t) for s, t in rep.arrows if s == k)
    blocks = [(t, rep.dims[t]) for _, t in out_arrows]
    dim_total = sum(d for _, d in blocks)
    m = rep.dims[k]
    # columns of the stacked map f: M_k -> (+) M_t
    f_columns = []
    for c in range(m):
        col = []
        for (s, t) in out_arrows:
            mat = rep.maps[(s, t)]
            col.extend(mat[r][c] for r in range(rep.dims[t]))
        f_columns.append(col)
    pi = _cokernel_projection(f_columns, dim_total)
    new_dim_k = len(pi)

    new_arrows = _reflect_arrows(rep.arrows, k)
    dims = dict(rep.dims)
    dims[k] = new_dim_k
    maps = {}
    offset = 0
    offsets = {}
    for t, d in blocks:
        offsets[t] = offset
        offset += d
    for s, t in rep.arrows:
        if s == k:
            off = offsets[t]
            block = tuple(
                tuple(pi[r][off + c] for c in range(rep.dims[t]))
                for r in range(new_dim_k)
            )
            maps[(t, k)] = block
        elif t == k:
            raise ValueError(f"vertex {k} is not a source")
        else:
            maps[(s, t)] = rep.maps[(s, t)]
    return Rep(new_arrows, dims, maps)


def indecomposable_rep(quiver: DynkinQuiver, root: tuple[int, ...]) -> Rep:
    """Explicit matrices for the indecomposable with the given positive root."""
    n = quiver.n
    seq = _topological_sinks_first(n, quiver.arrows)
    arrows = tuple(quiver.arrows)
    beta = tuple(root)
    steps = []  # (vertex, arrows before the reflection)
    t = 0
    cap = n * (quiver.coxeter_number + 2)
    while sum(beta) > 1:
        k = seq[t % n]
        assert not any(s == k for s, _ in arrows), "sequence lost admissibility"
        beta_new = _reflect_root(quiver, beta, k)
        if any(x < 0 for x in beta_new):
            raise ValueError(f"{root} is not a positive root")
        # Reflect even when beta is fixed; the functor is an equivalence away
        # from S_k and the sink sequence stays admissible only if we do.
        steps.append((k, arrows))
        arrows = _reflect_arrows(arrows, k)
        beta = beta_new
        t += 1
        if t > cap:
            raise RuntimeError(f"reflection walk did not terminate for {root}")
    j = beta.index(1) + 1
    rep = _simple_rep(arrows, n, j)
    for k, arrows_before in reversed(steps):
        rep = _reflect_source_minus(rep, k)
        assert rep.arrows == tuple(arrows_before)
    assert tuple(rep.dims[i] for i in quiver.vertices) == tuple(root)
    return rep


def hom_space_dim(m: Rep, n_: Rep) -> int:
    """Nullity of the intertwiner system for Hom(M, N)."""
    verts = sorted(m.dims)
    unknown_offset = {}
    total = 0
    for v in verts:
        unknown_offset[v] = total
        total += n_.dims[v] * m.dims[v]
    rows = []
    for (s, t) in m.arrows:
        a = m.maps[(s, t)]   # dims: (m_t, m_s)
        b = n_.maps[(s, t)]  # dims: (n_t, n_s)
        # phi_t a - b phi_s = 0, one scalar equation per (r, c) in (n_t, m_s)
        for r in range(n_.dims[t]):
            for c in range(m.dims[s]):
                row = [Fraction(0)] * total
                for k in range(m.dims[t]):  # phi_t[r][k] * a[k][c]
                    if a[k][c] != 0:
                        row[unknown_offset[t] + r * m.dims[t] + k] += a[k][c]
                for k in range(n_.dims[s]):  # -b[r][k] * phi_s[k][c]
                    if b[r][k] != 0:
                        row[unknown_offset[s] + k * m.dims[s] + c] -= b[r][k]
                if any(x != 0 for x in row):
                    rows.append(row)
    return total - matrix_rank(rows)


class BruteForceOracle:
    """Caches explicit representations per quiver and answers Hom queries."""

    def __init__(self, ar: ARQuiver):
        self.ar = ar
        self._reps: dict[tuple[int, ...], Rep] = {}

    def rep(self, root: tuple[int, ...]) -> Rep:
        if root not in self._reps:
            self._reps[root] = indecomposable_rep(self.ar.quiver, root)
        return self._reps[root]

    def hom_dim(self, x: DerivedObject, y: DerivedObject) -> int:
        gap = y.shift - x.shift
        if gap not in (0, 1):
            return 0
        rx = self.ar.root_of[x.slot]
        ry = self.ar.root_of[y.slot]
        hom = hom_space_dim(self.rep(rx), self.rep(ry))
        if gap == 0:
            return hom
        return hom - euler_form(self.ar.quiver, rx, ry)


def hom_dim_bruteforce(ar: ARQuiver, x: DerivedObject, y: DerivedObject) -> int:
    """Independent Hom oracle; agrees with ARQuiver.hom_dim on all inputs."""
    oracle = getattr(ar, "_bruteforce_oracle", None)
    if oracle is None:
        oracle = BruteForceOracle(ar)
        ar._bruteforce_oracle = oracle
    return oracle.hom_dim(x, y)
