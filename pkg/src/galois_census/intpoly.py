"""Exact integer polynomial algebra.

Resultants via fraction-free (Bareiss) elimination on the Sylvester matrix,
with a subresultant PRS fast path used by the discriminant; the discriminant
of a monic family viewed as a polynomial in its constant term; the double
discriminant; factorization over Q by Hensel lifting and subset recombination
(degrees here stay small, so recombination beats lattice methods); and integer
diagnostics (squarefull test, radical, omega).

All operations are pure functions of their inputs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import arith, ffpoly
from .errors import UnsupportedDegreeError


# ----------------------------------------------------------------------------
# polynomial type
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial; coefficients lowest degree first, trailing zeros trimmed."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.lc == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly(tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        out = IntPoly((1,))
        for _ in range(e):
            out = out * self
        return out

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * self.coeffs[i] for i in range(1, len(self.coeffs))))

    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive_part(self) -> "IntPoly":
        """self / content, normalized to positive leading coefficient."""
        g = self.content()
        if g == 0:
            return self
        if self.lc < 0:
            g = -g
        return IntPoly(tuple(c // g for c in self.coeffs))

    def shift_x(self, c: int) -> "IntPoly":
        """The polynomial f(x + c)."""
        out = IntPoly(())
        xc = IntPoly((c, 1))
        for coef in reversed(self.coeffs):
            out = out * xc + IntPoly((coef,))
        return out

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{i}" if mag == 1 else f"{mag}*x^{i}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def int_poly(*coeffs_low_to_high: int) -> IntPoly:
    return IntPoly(tuple(coeffs_low_to_high))


X = IntPoly((0, 1))


@dataclass(frozen=True)
class MonicIntPoly:
    """x^n + a_1 x^{n-1} + ... + a_n given by the tail coefficients (a_1, ..., a_n)."""

    n: int
    a: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("degree must be at least 1")
        if len(self.a) != self.n:
            raise ValueError("need exactly n tail coefficients")
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))

    def to_intpoly(self) -> IntPoly:
        return IntPoly(tuple(reversed(self.a)) + (1,))

    @classmethod
    def from_intpoly(cls, f: IntPoly) -> "MonicIntPoly":
        if not f.is_monic or f.degree < 1:
            raise ValueError("not a monic polynomial of positive degree")
        return cls(f.degree, tuple(reversed(f.coeffs[:-1])))

    def __str__(self) -> str:
        return str(self.to_intpoly())


# ----------------------------------------------------------------------------
# exact division
# ----------------------------------------------------------------------------

def try_div_exact(f: IntPoly, g: IntPoly) -> IntPoly | None:
    """The exact quotient f / g in Z[x], or None if g does not divide f."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        return IntPoly(())
    if f.degree < g.degree:
        return None
    rem = list(f.coeffs)
    q = [0] * (f.degree - g.degree + 1)
    gl = g.lc
    for k in range(f.degree - g.degree, -1, -1):
        head = rem[g.degree + k]
        if head % gl:
            return None
        c = head // gl
        q[k] = c
        if c:
            for j, gc in enumerate(g.coeffs):
                rem[j + k] -= c * gc
    if any(rem):
        return None
    return IntPoly(tuple(q))


def poly_gcd_z(f: IntPoly, g: IntPoly) -> IntPoly:
    """gcd in Z[x], primitive with positive leading coefficient (content ignored)."""
    a, b = f.primitive_part(), g.primitive_part()
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    while not b.is_zero and b.degree > 0:
        if a.degree < b.degree:
            a, b = b, a
            continue
        # pseudo-remainder, then strip content
        d = a.degree - b.degree
        r = a * (b.lc ** (d + 1))
        while not r.is_zero and r.degree >= b.degree:
            k = r.degree - b.degree
            c = r.lc // b.lc
            r = r - IntPoly((0,) * k + b.coeffs) * c
        a, b = b, r.primitive_part()
    if b.is_zero:
        return a.primitive_part()
    return IntPoly((1,))  # nonzero constant remainder: coprime


# ----------------------------------------------------------------------------
# resultants and discriminants
# ----------------------------------------------------------------------------

def _sylvester_matrix(f: IntPoly, g: IntPoly) -> list[list[int]]:
    m, n = f.degree, g.degree
    size = m + n
    fa = list(reversed(f.coeffs))
    ga = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fa + [0] * (size - i - len(fa)))
    for i in range(m):
        rows.append([0] * i + ga + [0] * (size - i - len(ga)))
    return rows


def _bareiss_det_int(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _bareiss_det_poly(m: list[list[IntPoly]]) -> IntPoly:
    n = len(m)
    if n == 0:
        return IntPoly((1,))
    m = [row[:] for row in m]
    sign = 1
    prev = IntPoly((1,))
    for k in range(n - 1):
        if m[k][k].is_zero:
            piv = next((i for i in range(k + 1, n) if not m[i][k].is_zero), None)
            if piv is None:
                return IntPoly(())
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                q = try_div_exact(num, prev)
                assert q is not None, "Bareiss division must be exact"
                m[i][j] = q
            m[i][k] = IntPoly(())
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) as the determinant of the Sylvester matrix (fraction-free).

    Follows the standard convention Res(f, g) = lc(f)^deg(g) * prod g(alpha_i)
    over the roots of f, which the Sylvester determinant computes.
    """
    if f.is_zero and g.is_zero:
        raise ValueError("resultant of two zero polynomials")
    if f.is_zero or g.is_zero:
        return 0
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree
    return _bareiss_det_int(_sylvester_matrix(f, g))


def _resultant_prs(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) by the subresultant PRS; equal to the Sylvester determinant."""
    if f.is_zero and g.is_zero:
        raise ValueError("resultant of two zero polynomials")
    if f.is_zero or g.is_zero:
        return 0
    s = 1
    a, b = f, g
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2:
            s = -s
        a, b = b, a
    if b.degree == 0:
        return s * b.lc ** a.degree
    ca, cb = abs(a.content()), abs(b.content())
    t = ca ** b.degree * cb ** a.degree
    a = IntPoly(tuple(c // ca for c in a.coeffs))
    b = IntPoly(tuple(c // cb for c in b.coeffs))
    gp, hp = 1, 1
    while True:
        da, db = a.degree, b.degree
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        # pseudo-remainder of a by b
        r = a * (b.lc ** (delta + 1))
        while not r.is_zero and r.degree >= b.degree:
            k = r.degree - b.degree
            c = r.lc // b.lc
            r = r - IntPoly((0,) * k + b.coeffs) * c
        a = b
        div = gp * hp ** delta
        b = IntPoly(tuple(c // div for c in r.coeffs))
        if b.is_zero:
            return 0
        gp = a.lc
        if delta == 0:
            pass  # h unchanged
        elif delta == 1:
            hp = gp
        else:
            hp = gp ** delta // hp ** (delta - 1)
        if b.degree == 0:
            break
    h_final = b.lc ** a.degree // hp ** (a.degree - 1) if a.degree >= 1 else b.lc
    return s * t * h_final


def discriminant(f: IntPoly) -> int:
    """(-1)^{n(n-1)/2} Res(f, f') / lc(f), an exact integer (n = deg f >= 1)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if f.is_monic and 2 <= n <= 6:
        return _disc_monic_table(f)
    res = _resultant_prs(f, f.derivative()) if n > 1 else f.lc
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    num = sign * res
    q, r = divmod(num, f.lc)
    assert r == 0, "discriminant division must be exact"
    return q


def _disc_monic_table(f: IntPoly) -> int:
    """Monic discriminant by the expanded coefficient formula (2 <= deg <= 6)."""
    from ._tables import DISC_TERMS
    n = f.degree
    a = tuple(reversed(f.coeffs[:-1]))  # (a_1, ..., a_n)
    total = 0
    for coef, exps in DISC_TERMS[n]:
        term = coef
        for ai, e in zip(a, exps):
            if e:
                term *= ai ** e
        total += term
    return total


def _monic_from_prefix(n: int, prefix: tuple[int, ...], t: int) -> IntPoly:
    return IntPoly((t,) + tuple(reversed(prefix)) + (1,))


def disc_in_an(n: int, prefix: tuple[int, ...]) -> IntPoly:
    """Disc_x(x^n + a_1 x^{n-1} + ... + a_{n-1} x + t) as a polynomial in t.

    Computed by exact interpolation from the discriminant at t = 0..n-1; the
    result has degree exactly n-1 with constant leading coefficient +-n^n.
    """
    if n < 2:
        raise ValueError("need degree n >= 2")
    prefix = tuple(int(x) for x in prefix)
    if len(prefix) != n - 1:
        raise ValueError("prefix must have n-1 entries")
    pts = [(t, discriminant(_monic_from_prefix(n, prefix, t))) for t in range(n)]
    # Newton's divided differences; the result is integer-valued so the final
    # monomial coefficients must come out integral.
    coefs = [Fraction(v) for _, v in pts]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coefs[i] = (coefs[i] - coefs[i - 1]) / (pts[i][0] - pts[i - level][0])
    poly = IntPoly(())
    acc = IntPoly((1,))
    for i in range(n):
        num = coefs[i]
        scaled = IntPoly(tuple(num.numerator * c for c in acc.coeffs))
        assert all(c % num.denominator == 0 for c in scaled.coeffs)
        poly = poly + IntPoly(tuple(c // num.denominator for c in scaled.coeffs))
        acc = acc * IntPoly((-pts[i][0], 1))
    return poly


def _disc_in_an_symbolic(n: int, prefix: tuple[int, ...]) -> IntPoly:
    """Same as disc_in_an but via fraction-free elimination over Z[t]."""
    if n < 2:
        raise ValueError("need degree n >= 2")
    t = IntPoly((0, 1))
    coeffs = [t] + [IntPoly((c,)) for c in reversed(prefix)] + [IntPoly((1,))]
    # f = x^n + ... with coefficients in Z[t]; build Sylvester of f, f'
    fa = list(reversed(coeffs))  # degree-descending in x
    # derivative coefficients descending: n*1, (n-1)*a_1, ..., 1*a_{n-1}
    da = [IntPoly(((n - i),)) * fa[i] for i in range(n)]
    size = n + (n - 1)
    zero = IntPoly(())
    rows = []
    for i in range(n - 1):
        rows.append([zero] * i + fa + [zero] * (size - i - len(fa)))
    for i in range(n):
        rows.append([zero] * i + da + [zero] * (size - i - len(da)))
    det = _bareiss_det_poly(rows)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return det if sign == 1 else -det


def double_discriminant(n: int, prefix: tuple[int, ...]) -> int:
    """Disc_t of disc_in_an(n, prefix); 1 (degenerate) for n = 2.

    The n = 2 inner polynomial is linear in t and has no discriminant; the
    sentinel keeps census code paths uniform.
    """
    if n < 2:
        raise ValueError("need degree n >= 2")
    if n == 2:
        return 1
    inner = disc_in_an(n, prefix)
    assert inner.degree == n - 1
    return discriminant(inner)


# ----------------------------------------------------------------------------
# factorization over Q
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class IntFactorization:
    """unit * content * prod factor^multiplicity == the input, exactly.

    Factors are primitive, irreducible over Q, with positive leading
    coefficient, pairwise non-associate, sorted by (degree, coefficients).
    """

    unit: int
    content: int
    factors: tuple[tuple[IntPoly, int], ...]

    def product(self) -> IntPoly:
        out = IntPoly((self.unit * self.content,))
        for g, e in self.factors:
            out = out * g ** e
        return out

    @property
    def degrees(self) -> tuple[int, ...]:
        """Sorted factor degrees with multiplicity."""
        out: list[int] = []
        for g, e in self.factors:
            out.extend([g.degree] * e)
        return tuple(sorted(out))


def _squarefree_decomposition_z(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """f primitive, positive lc, degree >= 1 -> [(g, mult)] with g squarefree."""
    out = []
    g = poly_gcd_z(f, f.derivative())
    w = try_div_exact(f, g)
    assert w is not None
    i = 1
    while w.degree > 0:
        y = poly_gcd_z(w, g)
        fac = try_div_exact(w, y)
        assert fac is not None
        if fac.degree > 0:
            out.append((fac.primitive_part(), i))
        w = y
        g2 = try_div_exact(g, y)
        assert g2 is not None
        g = g2
        i += 1
    return out


def _hensel_pair(f, g, h, s, t, p, k):
    """One quadratic Hensel step mod p^k -> p^{2k} for monic f = g*h."""
    m = p ** k
    m2 = m * m

    def red(poly, mod):
        return [c % mod for c in poly]

    def pmul(a, b, mod):
        out = [0] * (len(a) + len(b) - 1) if a and b else []
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % mod
        return out

    def padd(a, b, mod):
        n = max(len(a), len(b))
        return [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % mod
                for i in range(n)]

    def psub(a, b, mod):
        n = max(len(a), len(b))
        return [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % mod
                for i in range(n)]

    def pdivmod_monic(a, b, mod):
        a = list(a)
        db = len(b) - 1
        q = [0] * max(len(a) - db, 0)
        for idx in range(len(a) - db - 1, -1, -1):
            c = a[idx + db] % mod
            if c:
                q[idx] = c
                for j in range(db + 1):
                    a[idx + j] = (a[idx + j] - c * b[j]) % mod
        return q, a[:db]

    def trim(a):
        while a and a[-1] == 0:
            a.pop()
        return a

    e = psub(f, pmul(g, h, m2), m2)
    # correction: e = g*(se mod h) + h*(te + qg), coefficients mod p^{2k}
    se = pmul(s, e, m2)
    q, r = pdivmod_monic(se, h, m2)
    u = padd(pmul(t, e, m2), pmul(q, g, m2), m2)
    u = u[: len(g) - 1]  # higher coefficients vanish mod p^{2k}; lc untouched
    g2 = padd(g, u, m2)
    h2 = padd(h, r, m2)
    # lift the Bezout pair: s2*g2 + t2*h2 = 1 mod p^{2k}
    d = psub(pmul(s, g2, m2), [1], m2)
    d = padd(d, pmul(t, h2, m2), m2)
    sd = pmul(s, d, m2)
    q2, r2 = pdivmod_monic(sd, h2, m2)
    s2 = psub(s, r2, m2)
    t2 = psub(t, padd(pmul(t, d, m2), pmul(q2, g2, m2), m2), m2)
    t2 = t2[: len(g) - 1] if len(t2) > len(g) - 1 else t2
    return trim(g2), trim(h2), trim(s2), trim(t2)


def _hensel_lift_monic(f_mod: list[int], leaves: list[list[int]], p: int,
                       exp: int) -> list[list[int]]:
    """Lift monic factorization prod(leaves) = f mod p to mod p^exp (f monic)."""
    if len(leaves) == 1:
        return [[c % p ** exp for c in f_mod]]
    half = len(leaves) // 2
    left, right = leaves[:half], leaves[half:]
    g = [1]
    for leaf in left:
        g = ffpoly._mul(g, leaf, p)
    h = [1]
    for leaf in right:
        h = ffpoly._mul(h, leaf, p)
    # Bezout over F_p
    s, t = _xgcd_fp(g, h, p)
    k = 1
    gk, hk, sk, tk = g, h, s, t
    while k < exp:
        gk, hk, sk, tk = _hensel_pair([c % p ** (2 * k) for c in f_mod],
                                      gk, hk, sk, tk, p, k)
        k *= 2
    mod = p ** exp
    gk = [c % mod for c in gk]
    hk = [c % mod for c in hk]
    return (_hensel_lift_monic(gk, left, p, exp)
            + _hensel_lift_monic(hk, right, p, exp))


def _xgcd_fp(a: list[int], b: list[int], p: int):
    """s, t with s*a + t*b = 1 mod p for coprime a, b over F_p."""
    r0, r1 = [c % p for c in a], [c % p for c in b]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = ffpoly._divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, ffpoly._sub(s0, ffpoly._mul(q, s1, p), p)
        t0, t1 = t1, ffpoly._sub(t0, ffpoly._mul(q, t1, p), p)
    assert len(r0) == 1, "polynomials not coprime mod p"
    inv = pow(r0[0], -1, p)
    return ffpoly._scale(s0, inv, p), ffpoly._scale(t0, inv, p)


def _centered(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _zassenhaus(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree f with positive lc, deg >= 1."""
    if f.degree == 1:
        return [f]
    # pick a prime with squarefree reduction and few modular factors
    best = None
    tried = 0
    for p in arith.primes_up_to(2000)[1:]:  # odd primes
        if f.lc % p == 0:
            continue
        fp = ffpoly.FpPoly(p, f.coeffs)
        dfp = ffpoly.FpPoly(p, f.derivative().coeffs)
        if ffpoly._deg(ffpoly._gcd(list(fp.coeffs), list(dfp.coeffs), p)) != 0:
            continue
        facs = ffpoly.factor_mod_p(fp)
        tried += 1
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        if tried >= 4 or len(facs) == 1:
            break
    assert best is not None, "no usable prime found"
    p, facs = best
    if len(facs) == 1:
        return [f]

    n = f.degree
    norm = math.isqrt(sum(c * c for c in f.coeffs)) + 1
    bound = 2 ** n * norm * abs(f.lc)
    exp = 1
    while p ** exp < 2 * bound + 1:
        exp *= 2

    lc_inv_mod = pow(f.lc, -1, p ** exp)
    f_monic_mod = [c * lc_inv_mod % p ** exp for c in f.coeffs]
    leaves = [list(g.coeffs) for g, _ in facs]
    lifted = _hensel_lift_monic(f_monic_mod, leaves, p, exp)
    mod = p ** exp

    factors: list[IntPoly] = []
    remaining = list(range(len(lifted)))
    current = f
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for combo in itertools.combinations(remaining, size):
            prod = [current.lc % mod]
            for i in combo:
                prod = _mulmod_int(prod, lifted[i], mod)
            cand = IntPoly(tuple(_centered(c, mod) for c in prod)).primitive_part()
            if cand.degree < 1:
                continue
            q = try_div_exact(current, cand)
            if q is not None:
                factors.append(cand)
                current = q.primitive_part()
                remaining = [i for i in remaining if i not in combo]
                found = True
                break
        if not found:
            size += 1
    if current.degree >= 1:
        factors.append(current.primitive_part())
    return factors


def _mulmod_int(a: list[int], b: list[int], m: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % m
    return out


def factor_over_Q(f: IntPoly) -> IntFactorization:
    """Complete factorization over Q: unit, integer content, irreducible primitives."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    unit = 1 if f.lc > 0 else -1
    content = abs(f.content()) if f.degree >= 0 else 0
    if f.degree == 0:
        return IntFactorization(unit=unit, content=abs(f.lc), factors=())
    prim = f.primitive_part()
    out: list[tuple[IntPoly, int]] = []
    for sqf, mult in _squarefree_decomposition_z(prim):
        for irr in _zassenhaus(sqf):
            out.append((irr, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return IntFactorization(unit=unit, content=content, factors=tuple(out))


def is_irreducible_q(f: IntPoly) -> bool:
    """Irreducibility over Q of a nonconstant polynomial."""
    if f.degree < 1:
        return False
    fac = factor_over_Q(f)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1


# ----------------------------------------------------------------------------
# integer diagnostics and the mod-p^2 persistence check
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class IntegerDiagnostics:
    is_perfect_square: bool
    is_squarefull: bool
    radical: int
    prime_factorization: tuple[tuple[int, int], ...]
    omega: int


def integer_diagnostics(m: int) -> IntegerDiagnostics:
    """Square/squarefull/radical/omega data for a nonzero integer."""
    if m == 0:
        raise ValueError("diagnostics need a nonzero integer")
    fac = arith.factorize(m)
    rad = 1
    for q, _ in fac:
        rad *= q
    return IntegerDiagnostics(
        is_perfect_square=arith.is_perfect_square(m),
        is_squarefull=all(e >= 2 for _, e in fac),
        radical=rad,
        prime_factorization=fac,
        omega=len(fac),
    )


@dataclass(frozen=True)
class PersistenceCheck:
    persists_mod_p2: bool
    partial_an_div_p: bool


def mod_p2_persistence(f: MonicIntPoly, p: int) -> PersistenceCheck:
    """Whether p^2 | Disc stays true under all mod-p changes of the constant
    term, and whether the formal d(Disc)/d(a_n) vanishes mod p at f.

    The first condition implies the second (one-variable Taylor expansion of
    the discriminant in the constant term).
    """
    n = f.n
    if n == 1:
        return PersistenceCheck(persists_mod_p2=False, partial_an_div_p=True)
    dpoly = disc_in_an(n, f.a[:-1])
    an = f.a[-1]
    p2 = p * p
    persists = all(dpoly(an + p * t) % p2 == 0 for t in range(p))
    partial = dpoly.derivative()(an) % p == 0
    return PersistenceCheck(persists_mod_p2=persists, partial_an_div_p=partial)
