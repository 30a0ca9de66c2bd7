"""Polynomial algebra over prime fields F_p.

Covers factorization (squarefree / distinct-degree / equal-degree), splitting
types with their index and automorphism weight, the exact Fourier transform of
the divisor-counting weight functions, and exhaustive box counts that probe
how index conditions at several primes equidistribute over integer coefficient
boxes.

Polynomials are coefficient tuples, lowest degree first, reduced mod p.
Equal-degree splitting walks a deterministic sequence of candidate splitters,
so factorizations are reproducible across runs and platforms.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import ResourceLimitError

WEIL_SLACK = 1e-9  # certified rounding slack for the DFT max


# ----------------------------------------------------------------------------
# low-level arithmetic on coefficient lists (lowest degree first)
# ----------------------------------------------------------------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _deg(c) -> int:
    return len(c) - 1


def _add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return _trim(out)


def _sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _trim(out)


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([v % p for v in out])


def _scale(a, s, p):
    s %= p
    return _trim([x * s % p for x in a])


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, da = _deg(b), _deg(a)
    if da < db:
        return [], _trim(a)
    inv = pow(b[-1], -1, p)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = a[db + k] * inv % p
        if c:
            q[k] = c
            for j in range(db + 1):
                a[j + k] = (a[j + k] - c * b[j]) % p
    return _trim(q), _trim(a)


def _mod(a, b, p):
    return _divmod(a, b, p)[1]


def _monic(a, p):
    if not a:
        return []
    return _scale(a, pow(a[-1], -1, p), p)


def _gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _mod(a, b, p)
    return _monic(a, p)


def _pow_mod(base, e, mod, p):
    result = [1]
    base = _mod(base, mod, p)
    while e:
        if e & 1:
            result = _mod(_mul(result, base, p), mod, p)
        base = _mod(_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _compose_mod(a, b, mod, p):
    """a(b(x)) mod mod, by Horner."""
    out: list[int] = []
    for c in reversed(a):
        out = _mod(_add(_mul(out, b, p), [c], p), mod, p)
    return out


def _deriv(a, p):
    return _trim([i * a[i] % p for i in range(1, len(a))])


def _eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


# ----------------------------------------------------------------------------
# public polynomial wrapper
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class FpPoly:
    """A polynomial over F_p; coefficients lowest degree first, reduced mod p."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("modulus must be a prime >= 2")
        c = _trim([x % self.p for x in self.coeffs])
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x: int) -> int:
        return _eval(list(self.coeffs), x, self.p)

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        return FpPoly(self.p, tuple(_mul(list(self.coeffs), list(other.coeffs), self.p)))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}*x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return " + ".join(terms)


def fp_poly(p: int, *coeffs_low_to_high: int) -> FpPoly:
    return FpPoly(p, tuple(coeffs_low_to_high))


# ----------------------------------------------------------------------------
# factorization over F_p
# ----------------------------------------------------------------------------

def _squarefree_parts(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Decompose monic f into [(g, m)] with f = prod g^m, g squarefree, chars handled."""
    out: list[tuple[list[int], int]] = []

    def rec(f: list[int], mult: int):
        if _deg(f) <= 0:
            return
        d = _deriv(f, p)
        if not d:
            # f = g(x^p) = (h(x))^p over F_p (prime field: coefficient Frobenius is identity)
            h = _trim([f[i] for i in range(0, len(f), p)])
            rec(h, mult * p)
            return
        w = _gcd(f, d, p)
        v = _divmod(f, w, p)[0]  # product of squarefree part's factors
        k = 1
        while _deg(v) > 0:
            h = _gcd(v, w, p)
            piece = _divmod(v, h, p)[0]
            if _deg(piece) > 0:
                out.append((piece, mult * k))
            v = h
            w = _divmod(w, h, p)[0]
            k += 1
        if _deg(w) > 0:
            rec(w, mult)

    rec(f, 1)
    return out


def _distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Split squarefree monic f into [(product_of_irreducibles, degree)]."""
    out = []
    x = [0, 1]
    rest = list(f)
    h = list(x)
    d = 0
    while _deg(rest) >= 2 * (d + 1):
        d += 1
        h = _pow_mod(h, p, rest, p)  # x^{p^d} mod rest
        g = _gcd(_sub(h, x, p), rest, p)
        if _deg(g) > 0:
            out.append((g, d))
            rest = _divmod(rest, g, p)[0]
            h = _mod(h, rest, p)
    if _deg(rest) > 0:
        out.append((rest, _deg(rest)))
    return out


def _candidate_splitters(p: int, max_deg: int):
    """Deterministic sequence of nonconstant polys of degree < max_deg."""
    for deg in range(1, max_deg):
        for code in range(p ** deg):
            coeffs = []
            c = code
            for _ in range(deg):
                coeffs.append(c % p)
                c //= p
            coeffs.append(1)
            yield coeffs
    # keep going with higher degrees if tiny fields run dry
    deg = max_deg
    while True:
        for code in range(p ** deg):
            coeffs = []
            c = code
            for _ in range(deg):
                coeffs.append(c % p)
                c //= p
            coeffs.append(1)
            yield coeffs
        deg += 1


def _split_once(g: list[int], d: int, p: int) -> list[int]:
    """A proper monic factor of squarefree g whose irreducible parts all have degree d."""
    for h in _candidate_splitters(p, max(2 * d, 2)):
        h = _mod(h, g, p)
        if _deg(h) < 1:
            continue
        u = _gcd(h, g, p)
        if 0 < _deg(u) < _deg(g):
            return u
        if p == 2:
            # trace map over F_{2^d}
            t = list(h)
            acc = list(h)
            for _ in range(d - 1):
                t = _pow_mod(t, 2, g, p)
                acc = _add(acc, t, p)
            u = _gcd(acc, g, p)
        else:
            e = (p ** d - 1) // 2
            t = _pow_mod(h, e, g, p)
            u = _gcd(_sub(t, [1], p), g, p)
        if 0 < _deg(u) < _deg(g):
            return u
    raise RuntimeError("equal-degree splitting failed")


def _equal_degree(f: list[int], d: int, p: int) -> list[list[int]]:
    """Split squarefree monic f, all of whose irreducible factors have degree d."""
    if _deg(f) == d:
        return [list(f)]
    todo = [list(f)]
    done: list[list[int]] = []
    while todo:
        g = todo.pop()
        if _deg(g) == d:
            done.append(g)
            continue
        split = _split_once(g, d, p)
        todo.append(split)
        todo.append(_divmod(g, split, p)[0])
    done.sort(key=lambda c: (len(c), c[::-1]))
    return done


def factor_mod_p(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Complete factorization of nonzero f into monic irreducibles with exponents.

    The product of the factor powers times the unit reproduces f exactly; the
    unit (leading coefficient) is dropped from the result, so callers of
    non-monic input should track f.coeffs[-1] themselves.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    p = f.p
    m = _monic(list(f.coeffs), p)
    if _deg(m) == 0:
        return []
    out: list[tuple[FpPoly, int]] = []
    for g, mult in _squarefree_parts(m, p):
        for prod, d in _distinct_degree(g, p):
            for irr in _equal_degree(prod, d, p):
                out.append((FpPoly(p, tuple(irr)), mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs, t[1]))
    return out


def is_irreducible(f: FpPoly) -> bool:
    """Rabin test: x^{p^n} = x mod f and gcd(x^{p^{n/q}} - x, f) = 1 for primes q | n."""
    p, c = f.p, list(f.coeffs)
    n = _deg(c)
    if n <= 0:
        return False
    if n == 1:
        return True
    c = _monic(c, p)
    x = [0, 1]
    n_facs = {q for q in range(2, n + 1) if n % q == 0 and all(q % r for r in range(2, q))}
    frob = [list(x)]
    for _ in range(n):
        frob.append(_pow_mod(frob[-1], p, c, p))
    if _sub(frob[n], x, p):
        return False
    for q in n_facs:
        if _deg(_gcd(_sub(frob[n // q], x, p), c, p)) != 0:
            return False
    return True


# ----------------------------------------------------------------------------
# splitting types
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class SplittingType:
    """A multiset of (degree, exponent) parts, the shape of a mod-p factorization."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("splitting type needs at least one part")
        ps = tuple(sorted((int(d), int(e)) for d, e in self.parts))
        if any(d < 1 or e < 1 for d, e in ps):
            raise ValueError("parts must have degree >= 1 and exponent >= 1")
        object.__setattr__(self, "parts", ps)

    @property
    def n(self) -> int:
        """Total degree sum(e_i * f_i)."""
        return sum(d * e for d, e in self.parts)

    @property
    def index(self) -> int:
        return sum((e - 1) * d for d, e in self.parts)

    @property
    def aut_count(self) -> int:
        prod = 1
        for d, _ in self.parts:
            prod *= d
        for _, count in _part_multiplicities(self.parts).items():
            prod *= math.factorial(count)
        return prod

    def __str__(self) -> str:
        return format_splitting_type(self)


def _part_multiplicities(parts) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for part in parts:
        out[part] = out.get(part, 0) + 1
    return out


def format_splitting_type(sigma: SplittingType) -> str:
    return " ".join(f"{d}^{e}" if e > 1 else f"{d}" for d, e in sigma.parts)


def parse_splitting_type(text: str) -> SplittingType:
    parts = []
    for tok in text.split():
        if "^" in tok:
            d, e = tok.split("^", 1)
        else:
            d, e = tok, "1"
        parts.append((int(d), int(e)))
    return SplittingType(tuple(parts))


def splitting_type(f: FpPoly) -> SplittingType:
    """Splitting type of monic nonzero f."""
    if f.is_zero or not f.is_monic:
        raise ValueError("splitting type requires a monic polynomial")
    facs = factor_mod_p(f)
    return SplittingType(tuple((g.degree, e) for g, e in facs))


def enumerate_splitting_types(max_total: int, min_index: int = 0) -> list[SplittingType]:
    """All splitting types with total degree <= max_total and index >= min_index.

    Ordered lexicographically on the sorted (degree, exponent) part lists, so
    sweep reports are byte-stable.
    """
    found = set()

    def rec(remaining: int, minimum: tuple[int, int], acc: tuple):
        if acc:
            found.add(acc)
        for d in range(1, remaining + 1):
            for e in range(1, remaining // d + 1):
                part = (d, e)
                if part < minimum or part in acc:
                    continue
                if d * e <= remaining:
                    rec(remaining - d * e, part, tuple(sorted(acc + (part,))))

    rec(max_total, (1, 1), ())
    types = [SplittingType(parts) for parts in found]
    types = [s for s in types if s.index >= min_index]
    types.sort(key=lambda s: s.parts)
    return types


# ----------------------------------------------------------------------------
# the weight function w_{p,sigma} and its Fourier transform
# ----------------------------------------------------------------------------

def weight_w(f: FpPoly, sigma: SplittingType) -> int:
    """Number of tuples of distinct monic irreducibles (P_1..P_r), up to
    permutations preserving sigma, with deg P_i = f_i and prod P_i^{e_i} | f."""
    if f.is_zero or not f.is_monic:
        raise ValueError("weight requires a monic polynomial")
    if sigma.n > f.degree:
        return 0
    p = f.p
    facs = {g.coeffs: (g.degree, e) for g, e in factor_mod_p(f)}
    count = 0
    for assignment in _assignments(sigma, _divisor_pool(facs)):
        if all(facs[poly][1] >= e for poly, e in assignment):
            count += 1
    return count


def _divisor_pool(facs) -> dict[int, list[tuple[int, ...]]]:
    pool: dict[int, list[tuple[int, ...]]] = {}
    for coeffs, (d, _) in facs.items():
        pool.setdefault(d, []).append(coeffs)
    for lst in pool.values():
        lst.sort()
    return pool


def _assignments(sigma: SplittingType, pool: dict[int, list]):
    """Yield [(poly, e), ...] choices of distinct polys per part, counted once
    per orbit of sigma-preserving permutations."""
    by_degree: dict[int, list[int]] = {}
    for d, e in sigma.parts:
        by_degree.setdefault(d, []).append(e)

    degree_choices = []
    for d, es in sorted(by_degree.items()):
        mult = _part_multiplicities([(d, e) for e in es])
        avail = pool.get(d, [])
        group_opts: list[list[tuple[tuple, int]]] = [[]]
        for (dd, e), cnt in sorted(mult.items()):
            new_opts = []
            for chosen in group_opts:
                used = {poly for poly, _ in chosen}
                rest = [a for a in avail if a not in used]
                for combo in itertools.combinations(rest, cnt):
                    new_opts.append(chosen + [(poly, e) for poly in combo])
            group_opts = new_opts
        degree_choices.append(group_opts)

    for combo in itertools.product(*degree_choices):
        yield [pe for group in combo for pe in group]


@dataclass(frozen=True)
class FourierReport:
    """Exact DFT summary for one (p, n, sigma)."""

    p: int
    n: int
    sigma: SplittingType
    what_zero: Fraction
    max_nonzero: float
    main_term: Fraction
    weil_cap: float
    weil_applicable: bool
    error_cap: float
    empirical_k: float
    passed: bool

    def csv_row(self) -> str:
        return ",".join([
            str(self.p), str(self.n), format_splitting_type(self.sigma),
            str(self.sigma.index), str(self.sigma.aut_count),
            str(self.what_zero.numerator), str(self.what_zero.denominator),
            f"{self.max_nonzero:.12e}", f"{self.weil_cap:.12e}",
            "1" if self.passed else "0",
        ])


FOURIER_CSV_HEADER = "p,n,sigma,k,aut,what_zero_num,what_zero_den,max_nonzero,weil_cap,pass"


def _poly_index(coeffs_low: list[int], n: int, p: int) -> int:
    """Mixed-radix index of monic degree-n poly with a_1 as the top digit."""
    idx = 0
    for i in range(n - 1, -1, -1):  # a_1 = coeff of x^{n-1} ... a_n = constant
        c = coeffs_low[i] if i < len(coeffs_low) else 0
        idx = idx * p + c
    return idx


def monic_irreducibles(p: int, d: int) -> list[tuple[int, ...]]:
    """All monic irreducible polynomials of degree d over F_p (coefficient tuples)."""
    out = []
    for code in range(p ** d):
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(c % p)
            c //= p
        coeffs.append(1)
        if is_irreducible(FpPoly(p, tuple(coeffs))):
            out.append(tuple(coeffs))
    return out


def _weight_array(p: int, n: int, sigma: SplittingType) -> np.ndarray:
    """w_{p,sigma}(f) for every monic degree-n f, indexed by _poly_index."""
    w = np.zeros(p ** n, dtype=np.int64)
    if sigma.n > n:
        return w
    pool = {d: monic_irreducibles(p, d) for d in {d for d, _ in sigma.parts}}
    cof_deg = n - sigma.n
    cofactors = []
    for code in range(p ** cof_deg):
        coeffs = []
        c = code
        for _ in range(cof_deg):
            coeffs.append(c % p)
            c //= p
        coeffs.append(1)
        cofactors.append(coeffs)
    for assignment in _assignments(sigma, pool):
        base = [1]
        for poly, e in assignment:
            for _ in range(e):
                base = _mul(base, list(poly), p)
        for cof in cofactors:
            prod = _mul(base, cof, p)
            w[_poly_index(prod, n, p)] += 1
    return w


def fourier_transform_w(p: int, n: int, sigma: SplittingType,
                        cap: int = 10 ** 7) -> FourierReport:
    """Exhaustive Fourier transform of w_{p,sigma} over the p^n monic polynomials.

    The transform is w_hat(g) = p^-n sum_f w(f) exp(2 pi i [f,g]/p) with the
    coefficient dot pairing [f,g] = sum a_i b_i mod p.  Weights are accumulated
    exactly per pairing residue, so the only floating-point rounding is the
    final length-p sum; w_hat(0) is returned as an exact rational.
    """
    if p ** n > cap:
        raise ResourceLimitError(f"p^n = {p ** n} exceeds cap {cap}")
    if sigma.n > n:
        raise ValueError("sigma total degree exceeds the ambient degree")
    size = p ** n
    w = _weight_array(p, n, sigma)
    total = int(w.sum())
    what_zero = Fraction(total, size)

    k = sigma.index
    aut = sigma.aut_count
    main_term = Fraction(1, aut * p ** k)
    weil_cap = (n - 1) * p ** (-k - 0.5)
    weil_applicable = p > n
    n2 = n * n
    error_cap = n2 * p ** (-k - 1.0)

    # digit matrix: one row per coefficient coordinate, one column per poly
    idx = np.arange(size, dtype=np.int64)
    digits = np.empty((n, size), dtype=np.int64)
    rem = idx
    for i in range(n):
        digits[i] = rem % p
        rem = rem // p
    roots = np.exp(2j * np.pi * np.arange(p) / p)

    # Per dual vector g, bucket the (integer) weights by the pairing residue
    # [f,g] mod p; bucket sums are exact in float64.  The only rounding is the
    # final length-p complex sum, done in fixed order.
    max_nonzero = 0.0
    gdig = np.empty(n, dtype=np.int64)
    for gi in range(1, size):
        rem = gi
        for i in range(n):
            gdig[i] = rem % p
            rem //= p
        dots = (digits.T @ gdig) % p
        buckets = np.bincount(dots, weights=w, minlength=p)
        val = 0j
        for t in range(p):  # fixed summation order
            val += buckets[t] * roots[t]
        m = abs(val) / size
        if m > max_nonzero:
            max_nonzero = float(m)

    empirical_k = float(abs(what_zero - main_term) * p ** (k + 1))
    main_ok = abs(what_zero - main_term) <= error_cap
    weil_ok = (not weil_applicable) or (max_nonzero <= weil_cap + WEIL_SLACK)
    return FourierReport(
        p=p, n=n, sigma=sigma, what_zero=what_zero, max_nonzero=max_nonzero,
        main_term=main_term, weil_cap=weil_cap, weil_applicable=weil_applicable,
        error_cap=error_cap, empirical_k=empirical_k, passed=bool(main_ok and weil_ok),
    )


# ----------------------------------------------------------------------------
# exhaustive box counts under index conditions
# ----------------------------------------------------------------------------

def index_mod_p(coeffs_monic_low: list[int], p: int) -> int:
    """ind(f) = deg f - deg rad(f mod p) for monic f given by low-first coeffs."""
    c = [x % p for x in coeffs_monic_low]
    n = _deg(_trim(list(c)))
    rad_deg = 0
    for g, _ in _squarefree_parts(_monic(_trim(list(c)), p), p):
        rad_deg += _deg(g)
    return n - rad_deg


@dataclass(frozen=True)
class BoxCount:
    """Exact count of monic polynomials in a box meeting index conditions."""

    count: int
    density_prediction: float
    prediction_exact: Fraction
    ratio: float
    densities: tuple[Fraction, ...] = field(default=())


def index_density(p: int, n: int, k: int, cap: int = 10 ** 7) -> Fraction:
    """Exact density of {ind(f) >= k} among monic degree-n polys over F_p."""
    if p ** n > cap:
        raise ResourceLimitError(f"p^n = {p ** n} exceeds cap {cap}")
    hits = 0
    for code in range(p ** n):
        coeffs = []
        c = code
        for _ in range(n):
            coeffs.append(c % p)
            c //= p
        coeffs.append(1)
        if index_mod_p(coeffs, p) >= k:
            hits += 1
    return Fraction(hits, p ** n)


def poisson_box_count(n: int, H: int, conditions: list[tuple[int, int]],
                      cap: int = 10 ** 7) -> BoxCount:
    """Count monic degree-n f with coefficients in [-H, H] and ind(f mod p_i) >= k_i.

    density_prediction is (2H+1)^n times the product of the exact per-prime
    densities; ratio = count / prediction measures equidistribution.
    """
    side = 2 * H + 1
    if side ** n > cap:
        raise ResourceLimitError(f"box size {side ** n} exceeds cap {cap}")
    ps = [p for p, _ in conditions]
    if len(set(ps)) != len(ps):
        raise ValueError("condition primes must be distinct")

    masks = []
    densities = []
    for p, k in conditions:
        size = p ** n
        if size > cap:
            raise ResourceLimitError(f"p^n = {size} exceeds cap {cap}")
        good = np.zeros(size, dtype=bool)
        hits = 0
        for code in range(size):
            coeffs = []
            c = code
            for _ in range(n):
                coeffs.append(c % p)
                c //= p
            coeffs.append(1)
            if index_mod_p(coeffs, p) >= k:
                good[_poly_index(coeffs, n, p)] = True
                hits += 1
        masks.append((p, good))
        densities.append(Fraction(hits, size))

    vals = np.arange(-H, H + 1, dtype=np.int64)
    count = 0
    # iterate over a_1 to bound memory; vectorize the remaining n-1 axes
    inner_shape = (side,) * (n - 1)
    for a1 in vals:
        ok = np.ones(inner_shape, dtype=bool) if n > 1 else np.ones((), dtype=bool)
        for p, good in masks:
            idx = np.zeros(inner_shape, dtype=np.int64) + (int(a1) % p)
            for axis in range(n - 1):
                shape = [1] * (n - 1)
                shape[axis] = side
                idx = idx * p + (vals % p).reshape(shape)
            ok = ok & good[idx]
        count += int(np.count_nonzero(ok)) if n > 1 else int(bool(ok))

    dens_prod = Fraction(1)
    for d in densities:
        dens_prod *= d
    pred_exact = dens_prod * side ** n
    pred = float(pred_exact)
    ratio = float(Fraction(count) / pred_exact) if pred_exact != 0 else (
        1.0 if count == 0 else math.inf)
    return BoxCount(count=count, density_prediction=pred, prediction_exact=pred_exact,
                    ratio=ratio, densities=tuple(densities))
