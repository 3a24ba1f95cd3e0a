"""Graded dimensions of the quantum Serre quotient by exact rank computation.

The free algebra on generators E_1..E_n is graded by multidegree; the degree
slice of the two-sided ideal generated by the quantum Serre elements is a
matrix over Z[t] (after clearing t-denominators row by row), whose rank over
the fraction field is computed fraction-free in the Bareiss style.  The
quotient's graded dimension must match the Kostant partition count in every
degree; specializing t could drop rank, so nothing here ever leaves Z[t].
"""

from __future__ import annotations

from itertools import product

from .quiver import DynkinQuiver, cartan_entry


class DegreeTooLargeError(ValueError):
    pass


# -- dense Z[t] polynomials as trimmed tuples ------------------------------------

def ptrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def padd(a, b):
    n = max(len(a), len(b))
    return ptrim(
        tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))
    )


def pneg(a):
    return tuple(-x for x in a)


def pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return ptrim(out)


def pdivexact(a, b):
    """Exact division in Z[t]; raises if the division leaves a remainder."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ()
    rem = list(a)
    out = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        coeff = rem[k + len(b) - 1]
        if coeff % lead:
            raise ArithmeticError("inexact polynomial division")
        q = coeff // lead
        out[k] = q
        if q:
            for j, y in enumerate(b):
                rem[k + j] -= q * y
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return ptrim(out)


def bareiss_rank(rows) -> int:
    """Rank over Q(t) of a matrix with Z[t] entries, fraction-free."""
    m = [list(map(ptrim, row)) for row in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    prev = (1,)
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, n_rows):
            # The update must run even when m[r][col] = 0: Bareiss divisibility
            # is a minor identity on the whole submatrix, not per nonzero row.
            arc = m[r][col]
            for c in range(col + 1, n_cols):
                num = padd(pmul(pv, m[r][c]), pneg(pmul(arc, m[rank][c])))
                m[r][c] = pdivexact(num, prev)
            m[r][col] = ()
        prev = pv
        rank += 1
        if rank == n_rows:
            break
    return rank


# -- the quantum Serre ideal slice --------------------------------------------------

def serre_generators(quiver: DynkinQuiver):
    """The q-Serre elements with denominators cleared, as {word: Laurent dict}.

    Non-adjacent i, j: E_i E_j - E_j E_i.  Adjacent: E_i^2 E_j - [2] E_i E_j E_i
    + E_j E_i^2 (the divided-power form scaled by [2]_t).
    """
    gens = []
    for i in quiver.vertices:
        for j in quiver.vertices:
            if i == j:
                continue
            a = cartan_entry(quiver, i, j)
            if a == 0:
                gens.append({(i, j): {0: 1}, (j, i): {0: -1}})
            else:
                gens.append(
                    {
                        (i, i, j): {0: 1},
                        (i, j, i): {1: -1, -1: -1},  # -[2]_t = -(t + t^-1)
                        (j, i, i): {0: 1},
                    }
                )
    return gens


def _content(word, n):
    beta = [0] * n
    for letter in word:
        beta[letter - 1] += 1
    return tuple(beta)


def _words(beta):
    """All words with the given letter content, lexicographically."""
    letters = []
    for i, k in enumerate(beta, start=1):
        letters.extend([i] * k)
    if not letters:
        yield ()
        return
    seen = set()

    def rec(remaining, prefix):
        if not remaining:
            yield tuple(prefix)
            return
        used = set()
        for k, letter in enumerate(remaining):
            if letter in used:
                continue
            used.add(letter)
            yield from rec(remaining[:k] + remaining[k + 1:], prefix + [letter])

    for w in rec(letters, []):
        if w not in seen:
            seen.add(w)
            yield w


def _multidegrees(n, total):
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _multidegrees(n - 1, total - first):
            yield (first,) + rest


def serre_quotient_dims(
    quiver: DynkinQuiver, maxdeg: int, hard_cap: int = 7
) -> dict[tuple[int, ...], int]:
    """Graded dimension of the free algebra mod the q-Serre ideal, per multidegree.

    Returns {beta: dim} for every multidegree with 1 <= |beta| <= maxdeg.
    """
    if maxdeg > hard_cap:
        raise DegreeTooLargeError(f"total degree {maxdeg} exceeds cap {hard_cap}")
    n = quiver.n
    gens = serre_generators(quiver)
    out: dict[tuple[int, ...], int] = {}
    for total in range(1, maxdeg + 1):
        for beta in _multidegrees(n, total):
            out[beta] = _slice_dim(quiver, gens, beta)
    return out


def _slice_dim(quiver: DynkinQuiver, gens, beta) -> int:
    n = quiver.n
    basis = sorted(_words(beta))
    col = {w: k for k, w in enumerate(basis)}
    rows = []
    for gen in gens:
        gamma = _content(next(iter(gen)), n)
        rest = tuple(b - g for b, g in zip(beta, gamma))
        if any(x < 0 for x in rest):
            continue
        for left_deg in _all_subdegrees(rest):
            right_deg = tuple(r - l for r, l in zip(rest, left_deg))
            for u in _words(left_deg):
                for w in _words(right_deg):
                    laurent_row: dict[tuple, dict[int, int]] = {}
                    for mid, coeff in gen.items():
                        word = u + mid + w
                        acc = laurent_row.setdefault(word, {})
                        for e, c in coeff.items():
                            acc[e] = acc.get(e, 0) + c
                    rows.append(_laurent_row_to_poly(laurent_row, col, len(basis)))
    rank = bareiss_rank([r for r in rows if any(r)])
    return len(basis) - rank


def _all_subdegrees(rest):
    return product(*(range(r + 1) for r in rest))


def _laurent_row_to_poly(laurent_row, col, width):
    exps = [e for coeffs in laurent_row.values() for e, c in coeffs.items() if c]
    shift = -min(exps) if exps and min(exps) < 0 else 0
    row = [()] * width
    for word, coeffs in laurent_row.items():
        nonzero = {e: c for e, c in coeffs.items() if c}
        if not nonzero:
            continue
        vec = [0] * (max(nonzero) + shift + 1)
        for e, c in nonzero.items():
            vec[e + shift] = c
        row[col[word]] = ptrim(vec)
    return row
