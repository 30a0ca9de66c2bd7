"""Vectorized box scanners behind enumerate_census.

Each degree gets a strategy that produces labels identical to
galois.classify (asserted over full small boxes in the test suite):

  n <= 3   closed-form discriminants and root enumeration, fully vectorized
  n = 4    vectorized root/quadratic-split/resolvent-root scatters; the rare
           C4-vs-D4 survivors fall back to the per-polynomial tree
  n = 5    per-polynomial classification (boxes stay small)
  n = 6,7  batched pipeline: vectorized root counts mod p witness the cycle
           types certifying S_n, and the small leftover set is settled by
           exact factorization

Counters use keys "group|certainty|counts_as"; specials are the coefficient
tuples of certified primitive non-S_n polynomials, which the census layer
feeds to the field-discriminant certifier.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter

import numpy as np

from . import arith, galois, intpoly
from ._tables import DISC_TERMS
from .galois import ClassifyOptions, GaloisLabel
from .intpoly import IntPoly, MonicIntPoly

S_KEY = {n: f"S{n}|certified|sn" for n in range(1, 8)}
UNDECIDED_KEY = "unknown|undecided|undecided"

# certified primitive non-S_n labels per degree: their carriers get certificates
SPECIAL_NAMES = {3: {"C3"}, 4: {"A4"}, 5: {"A5", "F20", "D5"}}


def label_key(label: GaloisLabel) -> str:
    return f"{label.group_name}|{label.certainty}|{label.counts_as}"


def _shape_key(degrees) -> str:
    return "shape:" + "+".join(map(str, degrees)) + "|certified|non_sn"


def scan_prefixes(n: int, H: int, mode: str, prefixes: list[tuple[int, ...]],
                  prime_bound: int):
    """Counters and special polynomials for the blocks under the prefixes."""
    if mode == "non_monic":
        return _scan_non_monic(n, H, prefixes, prime_bound)
    if n == 1:
        return Counter({S_KEY[1]: len(prefixes)}), []
    if n == 2:
        return _scan_n2(H, prefixes)
    if n == 3:
        return _scan_n3(H, prefixes)
    if n == 4:
        return _scan_n4(H, prefixes)
    if n == 5:
        return _scan_perpoly(5, H, prefixes, prime_bound)
    return _scan_n67(n, H, prefixes, prime_bound)


# ----------------------------------------------------------------------------
# shared vector helpers
# ----------------------------------------------------------------------------

def _square_mask(values: np.ndarray) -> np.ndarray:
    """Exact perfect-square mask for int64 values below 2^52."""
    nonneg = values >= 0
    clipped = np.where(nonneg, values, 0)
    root = np.rint(np.sqrt(clipped.astype(np.float64))).astype(np.int64)
    ok = np.zeros_like(nonneg)
    for cand in (root - 1, root, root + 1):
        ok |= (cand >= 0) & (cand * cand == clipped)
    return ok & nonneg


def _counts(mask: np.ndarray) -> int:
    return int(np.count_nonzero(mask))


def _disc_grid(n: int, prefix: tuple[int, ...], free_axes) -> np.ndarray:
    """Discriminant over a broadcast grid from the embedded term table."""
    coords = [np.int64(c) for c in prefix] + list(free_axes)
    total = None
    for coef, exps in DISC_TERMS[n]:
        term = np.int64(coef)
        for c, e in zip(coords, exps):
            if e:
                term = term * c ** e
        total = term if total is None else total + term
    return total


# ----------------------------------------------------------------------------
# degree 2 and 3
# ----------------------------------------------------------------------------

def _scan_n2(H: int, prefixes) -> tuple[Counter, list]:
    side = 2 * H + 1
    a2 = np.arange(-H, H + 1, dtype=np.int64)
    out: Counter = Counter()
    for (a1,) in prefixes:
        sq = _square_mask(a1 * a1 - 4 * a2)
        red = _counts(sq)
        out[_shape_key((1, 1))] += red
        out[S_KEY[2]] += side - red
    return out, []


def _scan_n3(H: int, prefixes) -> tuple[Counter, list]:
    a3 = np.arange(-H, H + 1, dtype=np.int64)
    rs = np.arange(-(H + 1), H + 2, dtype=np.int64)
    out: Counter = Counter()
    specials = []
    for a1, a2 in prefixes:
        disc = (18 * a1 * a2 * a3 - 4 * a1 ** 3 * a3 + a1 * a1 * a2 * a2
                - 4 * a2 ** 3 - 27 * a3 * a3)
        sq = _square_mask(disc)
        red = np.zeros(len(a3), dtype=bool)
        a3_of_r = -(rs ** 3 + a1 * rs ** 2 + a2 * rs)
        valid = np.abs(a3_of_r) <= H
        red[a3_of_r[valid] + H] = True
        out[_shape_key((1, 1, 1))] += _counts(red & sq)
        out[_shape_key((1, 2))] += _counts(red & ~sq)
        out[S_KEY[3]] += _counts(~red & ~sq)
        c3 = ~red & sq
        out["C3|certified|non_sn"] += _counts(c3)
        for i in np.nonzero(c3)[0]:
            specials.append((a1, a2, int(a3[i])))
    return out, specials


# ----------------------------------------------------------------------------
# degree 4
# ----------------------------------------------------------------------------

def _scan_n4(H: int, prefixes) -> tuple[Counter, list]:
    side = 2 * H + 1
    ax = np.arange(-H, H + 1, dtype=np.int64)
    rs = np.arange(-(H + 1), H + 2, dtype=np.int64).reshape(-1, 1)
    u_rng = np.arange(-2 * (H + 1), 2 * (H + 1) + 1, dtype=np.int64)
    v_rng = np.arange(-(H + 1) ** 2, (H + 1) ** 2 + 1, dtype=np.int64)
    U, V = np.meshgrid(u_rng, v_rng, indexing="ij")
    beta = np.arange(-2 * (H + 1) ** 2, 2 * (H + 1) ** 2 + 1,
                     dtype=np.int64).reshape(-1, 1)
    a3_row = ax.reshape(1, -1)
    a3_idx_row = np.broadcast_to(np.arange(side), (len(beta), side))

    out: Counter = Counter()
    specials: list[tuple[int, ...]] = []
    for a1, a2 in prefixes:
        A3 = ax.reshape(-1, 1)
        A4 = ax.reshape(1, -1)
        disc = _disc_grid(4, (a1, a2), (A3, A4))
        sq = _square_mask(disc)

        # rational-root scatter
        root = np.zeros((side, side), dtype=bool)
        a4_of = -(rs ** 4 + a1 * rs ** 3 + a2 * rs ** 2 + rs * a3_row)
        valid = np.abs(a4_of) <= H
        a3i = np.broadcast_to(np.arange(side), a4_of.shape)
        root[a3i[valid], a4_of[valid] + H] = True

        # quadratic-pair scatter: (x^2+ux+v)(x^2+wx+s)
        W = a1 - U
        S = a2 - V - U * W
        a3v = U * S + V * W
        a4v = V * S
        valid = (np.abs(a3v) <= H) & (np.abs(a4v) <= H)
        quad = np.zeros((side, side), dtype=bool)
        quad[a3v[valid] + H, a4v[valid] + H] = True

        reducible = root | quad

        # resolvent rational roots: res(beta) = 0 is linear in a4
        res_count = np.zeros((side, side), dtype=np.int16)
        den = 4 * beta + a1 * a1 - 4 * a2  # (nb, 1)
        num = beta ** 3 - a2 * beta ** 2 + a1 * a3_row * beta - a3_row ** 2
        dsafe = np.where(den != 0, den, 1)
        quo = num // dsafe
        rem = num - quo * dsafe
        hit = (den != 0) & (rem == 0) & (np.abs(quo) <= H)
        np.add.at(res_count, (a3_idx_row[hit], quo[hit] + H), 1)
        for zr in np.nonzero(den.ravel() == 0)[0]:
            b = int(beta[zr, 0])
            numz = b ** 3 - a2 * b * b + a1 * ax * b - ax * ax
            res_count[numz == 0, :] += 1

        irr = ~reducible
        v4 = irr & (res_count == 3)
        cd = irr & (res_count == 1)
        rest = irr & (res_count == 0)
        out["V4|certified|non_sn"] += _counts(v4)
        out["A4|certified|non_sn"] += _counts(rest & sq)
        out[S_KEY[4]] += _counts(rest & ~sq)
        out[_shape_key((2, 2))] += _counts(quad & ~root)

        for i, j in zip(*np.nonzero(rest & sq)):
            specials.append((a1, a2, int(ax[i]), int(ax[j])))
        for i, j in zip(*np.nonzero(cd)):
            name, _ = galois.classify_irreducible_quartic(
                a1, a2, int(ax[i]), int(ax[j]), int(disc[i, j]))
            out[f"{name}|certified|non_sn"] += 1
        for i, j in zip(*np.nonzero(root)):
            degrees = shape_of_monic((a1, a2, int(ax[i]), int(ax[j])))
            out[_shape_key(degrees)] += 1
    return out, specials


# ----------------------------------------------------------------------------
# exact shape resolution without full factorization
# ----------------------------------------------------------------------------

def _synth_div(poly: IntPoly, r: int) -> IntPoly | None:
    """poly / (x - r) if exact, else None."""
    out = []
    acc = 0
    for c in reversed(poly.coeffs):
        acc = acc * r + c
        out.append(acc)
    rem = out.pop()
    if rem != 0:
        return None
    return IntPoly(tuple(reversed(out)))


def _strip_roots(coeffs_tail: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """(number of linear factors with multiplicity, root-free remainder, low-first)."""
    poly = IntPoly(tuple(reversed(coeffs_tail)) + (1,))
    stripped = 0
    for r in galois.integer_roots(poly):
        while poly.degree > 0:
            q = _synth_div(poly, r)
            if q is None:
                break
            poly = q
            stripped += 1
    return stripped, poly.coeffs


def _quad_divisor(coeffs_low: tuple[int, ...], u_bound: int) -> tuple[int, int] | None:
    """A monic quadratic x^2+ux+v dividing the monic root-free polynomial."""
    c0 = coeffs_low[0]
    if c0 == 0:
        return None
    for v in galois._divisors(abs(c0)):
        for vv in (v, -v):
            for u in range(-u_bound, u_bound + 1):
                if _divisible_by(coeffs_low, (vv, u, 1)):
                    return u, vv
    return None


def _divisible_by(coeffs_low: tuple[int, ...], div_low: tuple[int, ...]) -> bool:
    rem = list(reversed(coeffs_low))
    d = len(div_low) - 1
    dl = list(reversed(div_low))  # leading first, monic
    n = len(rem) - 1
    for k in range(n - d + 1):
        c = rem[k]
        if c:
            for j in range(1, d + 1):
                rem[k + j] -= c * dl[j]
    return not any(rem[n - d + 1:])


def shape_of_monic(coeffs_tail: tuple[int, ...]) -> tuple[int, ...]:
    """Exact factor-degree multiset of x^n + a_1 x^{n-1} + ... + a_n (n <= 7).

    Root stripping plus a quadratic-divisor search settles everything except
    root-free remainders of degree 6 or 7, which go to full factorization.
    """
    root_bound = 1 + max(abs(c) for c in coeffs_tail) if coeffs_tail else 1
    ones, rest = _strip_roots(coeffs_tail)
    degrees = [1] * ones
    degrees.extend(_shape_rootfree(rest, root_bound))
    return tuple(sorted(degrees))


def _shape_rootfree(poly_low: tuple[int, ...], root_bound: int) -> list[int]:
    m = len(poly_low) - 1
    if m <= 0:
        return []
    if m in (2, 3):
        return [m]
    if m in (4, 5):
        q = _quad_divisor(poly_low, 2 * root_bound)
        if q is None:
            return [m]
        u, v = q
        quot = intpoly.try_div_exact(IntPoly(poly_low), IntPoly((v, u, 1)))
        return [2] + _shape_rootfree(quot.coeffs, root_bound)
    return list(intpoly.factor_over_Q(IntPoly(poly_low)).degrees)


# ----------------------------------------------------------------------------
# per-polynomial fallback scanner (degree 5, and non-monic mode)
# ----------------------------------------------------------------------------

def _scan_perpoly(n: int, H: int, prefixes, prime_bound: int):
    opts = ClassifyOptions(prime_bound=prime_bound)
    out: Counter = Counter()
    specials = []
    side = range(-H, H + 1)
    free = n - len(prefixes[0]) if prefixes else 0
    for prefix in prefixes:
        for tail in itertools.product(side, repeat=free):
            coeffs = prefix + tail
            label = galois.classify(MonicIntPoly(n, coeffs), opts)
            out[label_key(label)] += 1
            if (label.certainty == galois.CERTIFIED
                    and label.group_name in SPECIAL_NAMES.get(n, ())):
                specials.append(coeffs)
    return out, specials


def _scan_non_monic(n: int, H: int, prefixes, prime_bound: int):
    opts = ClassifyOptions(prime_bound=prime_bound, non_monic=True)
    out: Counter = Counter()
    side = range(-H, H + 1)
    free = (n + 1) - len(prefixes[0]) if prefixes else 0
    for prefix in prefixes:
        for tail in itertools.product(side, repeat=free):
            dense = prefix + tail  # (a_0, a_1, ..., a_n)
            label = galois.classify(IntPoly(tuple(reversed(dense))), opts)
            out[label_key(label)] += 1
    return out, []


# ----------------------------------------------------------------------------
# degree 6 and 7: batched pipeline
# ----------------------------------------------------------------------------

_CHUNK_ROWS = 200_000
_EVAL_CELL_CAP = 4_000_000  # bound on rows*p cells per root-count pass


def _scan_n67(n: int, H: int, prefixes, prime_bound: int):
    out: Counter = Counter()
    m = len(prefixes[0]) if prefixes else 0
    free = n - m
    side = 2 * H + 1
    rows_per_prefix = side ** free
    batch: list[tuple[int, ...]] = []

    def flush():
        if batch:
            _pipeline_n67(n, H, np.array(batch, dtype=np.int64), prime_bound, out)
            batch.clear()

    grid = list(itertools.product(range(-H, H + 1), repeat=free))
    for prefix in prefixes:
        for tail in grid:
            batch.append(prefix + tail)
        if len(batch) + rows_per_prefix > _CHUNK_ROWS:
            flush()
    flush()
    return out, []


def _count_roots_mod_p(rows_mod: np.ndarray, p: int) -> np.ndarray:
    """Root counts mod p of monic polynomials given by reduced tail rows."""
    M, n = rows_mod.shape
    out = np.empty(M, dtype=np.int64)
    step = max(1, _EVAL_CELL_CAP // max(p, 1))
    cs = np.arange(p, dtype=np.int64).reshape(1, -1)
    for lo in range(0, M, step):
        part = rows_mod[lo:lo + step]
        acc = np.ones((part.shape[0], p), dtype=np.int64)
        for i in range(n):
            acc = (acc * cs + part[:, i].reshape(-1, 1)) % p
        out[lo:lo + step] = (acc == 0).sum(axis=1)
    return out


def _no_small_content(coeffs_tail: tuple[int, ...], p: int, n: int) -> bool:
    """Given exactly one root mod p, decide whether the pattern is (n-1, 1),
    i.e. f has no irreducible factors of degree 2 (nor 3 when n = 7) mod p."""
    full = tuple(reversed(coeffs_tail)) + (1,)
    xp, red = galois._frobenius_residue(full, p)
    f = [c % p for c in full]
    x2 = galois._compose_residue(xp, xp, red, p, n)
    diff = x2[:]
    diff[1] = (diff[1] - 1) % p
    if max(galois._gcd_degree(diff, f, p), 0) != 1:
        return False
    if n == 7:
        x3 = galois._compose_residue(x2, xp, red, p, n)
        diff = x3[:]
        diff[1] = (diff[1] - 1) % p
        if max(galois._gcd_degree(diff, f, p), 0) != 1:
            return False
    return True


def _pipeline_n67(n: int, H: int, rows: np.ndarray, prime_bound: int,
                  out: Counter):
    N = rows.shape[0]
    row_tuples = [tuple(map(int, r)) for r in rows]

    # exact discriminants: int64 vector formula when provably safe
    if n == 6 and H <= 5:
        discs = [int(d) for d in _disc_grid(6, (), [rows[:, i] for i in range(6)])]
    else:
        discs = [intpoly.discriminant(IntPoly(tuple(reversed(t)) + (1,)))
                 for t in row_tuples]

    # rational roots by direct evaluation (int64 safe: |r| <= H+1, small H)
    has_root = np.zeros(N, dtype=bool)
    for r in range(-(H + 1), H + 2):
        if (abs(r) + 1) ** (n + 1) * (H + 1) < 2 ** 62:
            val = np.full(N, 1, dtype=np.int64)
            for i in range(n):
                val = val * r + rows[:, i]
            has_root |= val == 0
        else:
            for j, t in enumerate(row_tuples):
                acc = 1
                for c in t:
                    acc = acc * r + c
                if acc == 0:
                    has_root[j] = True
    insep = np.array([d == 0 for d in discs], dtype=bool)
    reducible_root = has_root | insep

    sq = np.array([d > 0 and math.isqrt(d) ** 2 == d for d in discs], dtype=bool)
    sq &= ~reducible_root

    # square-discriminant rows: settle reducibility exactly, then label in_An
    for i in np.nonzero(sq)[0]:
        degrees = shape_of_monic(row_tuples[i])
        if len(degrees) > 1:
            out[_shape_key(degrees)] += 1
        else:
            out[f"in_A{n}|certified|non_sn"] += 1

    # sample Frobenius patterns until (2,1^{n-2}) and (n-1,1) both witnessed
    idx = np.nonzero(~reducible_root & ~sq)[0]
    trans = np.zeros(N, dtype=bool)
    n1 = np.zeros(N, dtype=bool)
    disc_ok_int64 = all(abs(d) < 2 ** 62 for d in discs)
    disc_arr = (np.array(discs, dtype=np.int64) if disc_ok_int64 else None)
    for p in arith.primes_up_to(prime_bound):
        if len(idx) == 0:
            break
        if disc_arr is not None:
            sub = idx[disc_arr[idx] % p != 0]
        else:
            sub = np.array([i for i in idx if discs[i] % p], dtype=np.int64)
        if len(sub) == 0:
            continue
        r1 = _count_roots_mod_p(rows[sub] % p, p)
        trans[sub[r1 == n - 2]] = True
        for i in sub[(r1 == 1) & ~n1[sub]]:
            if _no_small_content(row_tuples[i], p, n):
                n1[i] = True
        idx = idx[~(trans[idx] & n1[idx])]

    certified_sn = ~reducible_root & ~sq & trans & n1
    out[S_KEY[n]] += _counts(certified_sn)

    # leftovers: exact shape or undecided
    for i in np.nonzero(~reducible_root & ~sq & ~certified_sn)[0]:
        degrees = shape_of_monic(row_tuples[i])
        if len(degrees) > 1:
            out[_shape_key(degrees)] += 1
        else:
            out[UNDECIDED_KEY] += 1

    # rows with rational roots or repeated factors: shapes
    for i in np.nonzero(reducible_root)[0]:
        degrees = shape_of_monic(row_tuples[i])
        out[_shape_key(degrees)] += 1
