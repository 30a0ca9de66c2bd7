"""Galois group classification of integer polynomials of degree <= 7.

Decision routes, all exact:
  degree <= 3   discriminant square test (plus irreducibility)
  degree 4      cubic resolvent and the Kappe-Warren decision tree
  degree 5      depressed integral form, degree-6 solvability resolvent,
                then a cycle-type search separating D5 from C5
  degree 6, 7   full symmetric group certified from witnessed cycle types
                (n-1, 1) and (2, 1, ..., 1); contained-in-A_n certified from a
                square discriminant; otherwise undecided

Also: the Dedekind p-maximality criterion, field discriminant certificates
assembled from it, and Frobenius cycle-type sampling at unramified primes.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import arith, ffpoly, grouptables, intpoly
from ._tables import QUINTIC_RESOLVENT_TERMS
from .errors import UnsupportedDegreeError
from .intpoly import IntPoly, MonicIntPoly

CERTIFIED = "certified"
HEURISTIC = "heuristic"
UNDECIDED = "undecided"

SN = "sn"
NON_SN = "non_sn"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class ClassifyOptions:
    prime_bound: int = 10_000
    non_monic: bool = False


DEFAULT_OPTIONS = ClassifyOptions()


@dataclass(frozen=True)
class GaloisLabel:
    """Classification result with its evidence trail.

    group_name is an entry of the degree-n transitive group table, a
    factorization shape tag like "shape:1+1+2", "degenerate" for dropped
    leading coefficients, "in_A6"/"in_A7" for certified-even but otherwise
    unresolved groups, or "unknown".  counts_as records the side of the
    E_n(H) ledger the polynomial lands on.
    """

    degree: int
    group_name: str
    certainty: str
    counts_as: str
    is_primitive: bool | None
    evidence: tuple[tuple[str, str], ...] = field(default=())

    @property
    def is_reducible_shape(self) -> bool:
        return self.group_name.startswith("shape:") or self.group_name == "degenerate"


def _shape_label(n: int, degrees: tuple[int, ...], evidence) -> GaloisLabel:
    tag = "shape:" + "+".join(map(str, degrees))
    return GaloisLabel(degree=n, group_name=tag, certainty=CERTIFIED,
                       counts_as=NON_SN, is_primitive=False, evidence=tuple(evidence))


def _table_label(n: int, name: str, certainty: str, evidence) -> GaloisLabel:
    entry = grouptables.table_entry(n, name)
    counts = SN if name == f"S{n}" else NON_SN
    return GaloisLabel(degree=n, group_name=name, certainty=certainty,
                       counts_as=counts, is_primitive=entry.is_primitive,
                       evidence=tuple(evidence))


# ----------------------------------------------------------------------------
# small helpers
# ----------------------------------------------------------------------------

def _divisors(m: int) -> list[int]:
    out = [1]
    for p, e in arith.factorize(m):
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


def integer_roots(f: IntPoly) -> list[int]:
    """Distinct integer roots of a nonzero integer polynomial."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    roots = []
    coeffs = list(f.coeffs)
    shift = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.append(0)
    g = IntPoly(tuple(coeffs))
    if g.degree >= 1:
        c0 = abs(g.coeffs[0])
        for d in _divisors(c0):
            for r in (d, -d):
                if g(r) == 0:
                    roots.append(r)
    return sorted(set(roots))


def _mulmod_red(u: list[int], v: list[int], red: list[list[int]], p: int,
                n: int) -> list[int]:
    """(u * v) mod f for residues of length n; red[k] = x^{n+k} mod f."""
    conv = [0] * (2 * n - 1)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                conv[i + j] += x * y
    out = conv[:n]
    for k in range(n - 1):
        c = conv[n + k]
        if c:
            row = red[k]
            for i in range(n):
                out[i] += c * row[i]
    return [c % p for c in out]


def _frobenius_residue(coeffs_low, p: int):
    """(x^p mod f, reduction rows) for monic squarefree-mod-p f."""
    n = len(coeffs_low) - 1
    f = [c % p for c in coeffs_low]
    neg = [(-f[i]) % p for i in range(n)]  # x^n = sum neg[i] x^i
    red = [neg]
    for _ in range(n - 2):
        prev = red[-1]
        top = prev[n - 1]
        row = [0] + prev[: n - 1]
        if top:
            for i in range(n):
                row[i] = (row[i] + top * neg[i]) % p
        red.append(row)
    if p < n:
        v = [0] * n
        v[p] = 1
        return v, red
    if p <= 512:
        # repeated multiplication by x is cheaper than square-and-multiply here
        v = [0] * n
        v[n - 1] = 1  # x^{n-1}
        for _ in range(p - (n - 1)):
            top = v[n - 1]
            v = [0] + v[: n - 1]
            if top:
                for i in range(n):
                    v[i] = (v[i] + top * neg[i]) % p
        return v, red
    v = [0] * n
    v[1] = 1
    result = None
    e = p
    while e:
        if e & 1:
            result = v if result is None else _mulmod_red(result, v, red, p, n)
        e >>= 1
        if e:
            v = _mulmod_red(v, v, red, p, n)
    return result, red


def _gcd_degree(a: list[int], b: list[int], p: int) -> int:
    """deg gcd(a, b) over F_p (lists low-first, may be unnormalized)."""
    a = a[:]
    b = b[:]
    while b and not b[-1] % p:
        b.pop()
    while a and not a[-1] % p:
        a.pop()
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            c = a[-1] * inv % p
            k = len(a) - 1 - db
            if c:
                for j in range(db + 1):
                    a[k + j] = (a[k + j] - c * b[j]) % p
            while a and a[-1] == 0:
                a.pop()
            if not a:
                break
        a, b = b, a
    return len(a) - 1 if a else -1


def factor_pattern_mod_p(coeffs_low: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Degree partition of a monic polynomial mod p (descending).

    Assumes f is squarefree mod p (callers skip primes dividing the
    discriminant).  Only as many Frobenius powers are computed as needed to
    pin down the partition; for degree <= 7 the root count and the degree-2
    and degree-3 contents always suffice.
    """
    n = len(coeffs_low) - 1
    if n == 1:
        return (1,)
    f = [c % p for c in coeffs_low]
    xp, red = _frobenius_residue(coeffs_low, p)
    diff = xp[:]
    diff[1] = (diff[1] - 1) % p
    r1 = _gcd_degree(diff, f, p)
    r1 = max(r1, 0)
    m = n - r1
    assert m != 1, "degree-1 leftover impossible for squarefree input"
    ones = [1] * r1
    if m == 0:
        return (1,) * n
    if m == 2:
        return tuple(sorted(ones + [2], reverse=True))
    if m == 3:
        return tuple(sorted(ones + [3], reverse=True))
    # need the degree-2 content
    x2 = _compose_residue(xp, xp, red, p, n)
    diff = x2[:]
    diff[1] = (diff[1] - 1) % p
    r2 = max(_gcd_degree(diff, f, p), 0)
    c2 = (r2 - r1) // 2
    if m == 4:
        rest = [2, 2] if c2 == 2 else [4]
        return tuple(sorted(ones + rest, reverse=True))
    if m == 5:
        rest = [2, 3] if c2 == 1 else [5]
        return tuple(sorted(ones + rest, reverse=True))
    if m == 6:
        if c2 == 3:
            rest = [2, 2, 2]
        elif c2 == 1:
            rest = [2, 4]
        else:
            x3 = _compose_residue(x2, xp, red, p, n)
            diff = x3[:]
            diff[1] = (diff[1] - 1) % p
            r3 = max(_gcd_degree(diff, f, p), 0)
            rest = [3, 3] if (r3 - r1) // 3 == 2 else [6]
        return tuple(sorted(ones + rest, reverse=True))
    # m == 7 (so r1 == 0 and n == 7)
    if c2 == 2:
        rest = [2, 2, 3]
    elif c2 == 1:
        rest = [2, 5]
    else:
        x3 = _compose_residue(x2, xp, red, p, n)
        diff = x3[:]
        diff[1] = (diff[1] - 1) % p
        r3 = max(_gcd_degree(diff, f, p), 0)
        rest = [3, 4] if (r3 - r1) // 3 == 1 else [7]
    return tuple(sorted(rest, reverse=True))


def _compose_residue(a: list[int], b: list[int], red, p: int, n: int) -> list[int]:
    """a(b(x)) mod f via Horner on residues."""
    out = [0] * n
    for c in reversed(a):
        out = _mulmod_red(out, b, red, p, n)
        out[0] = (out[0] + c) % p
    return out


def cycle_type_sample(f: MonicIntPoly, prime_bound: int) -> dict[tuple[int, ...], int]:
    """Frobenius cycle types of Gal(f) witnessed by factoring f mod p for all
    unramified p <= prime_bound; maps each partition to its smallest witness.

    Caller certifies f irreducible; ramified primes (p | Disc f) are skipped.
    """
    if prime_bound < 2:
        raise ValueError("prime bound must be >= 2")
    disc = intpoly.discriminant(f.to_intpoly())
    out: dict[tuple[int, ...], int] = {}
    for p in arith.primes_up_to(prime_bound):
        if disc % p == 0:
            continue
        pat = factor_pattern_mod_p(f.to_intpoly().coeffs, p)
        out.setdefault(pat, p)
    return out


def _fmt_types(samples: dict[tuple[int, ...], int]) -> str:
    return ";".join("+".join(map(str, t)) + "@" + str(p)
                    for t, p in sorted(samples.items()))


# ----------------------------------------------------------------------------
# Dedekind criterion and field discriminant certificates
# ----------------------------------------------------------------------------

def _dedekind_unchecked(f: MonicIntPoly, p: int) -> bool:
    fz = f.to_intpoly()
    fp = ffpoly.FpPoly(p, fz.coeffs)
    facs = ffpoly.factor_mod_p(fp)
    g_bar = [1]
    for gi, _ in facs:
        g_bar = ffpoly._mul(g_bar, list(gi.coeffs), p)
    h_bar = ffpoly._divmod([c % p for c in fz.coeffs], g_bar, p)[0]
    # lift with coefficients in [0, p)
    g_lift = IntPoly(tuple(g_bar))
    h_lift = IntPoly(tuple(h_bar))
    diff = fz - g_lift * h_lift
    m_coeffs = []
    for c in diff.coeffs:
        q, r = divmod(c, p)
        assert r == 0, "g*h must reproduce f mod p"
        m_coeffs.append(q)
    m_bar = [c % p for c in m_coeffs]
    gcd1 = ffpoly._gcd(g_bar, h_bar, p)
    gcd2 = ffpoly._gcd(gcd1, m_bar, p)
    return ffpoly._deg(gcd2) == 0


def dedekind_test(f: MonicIntPoly, p: int, verify_irreducible: bool = False) -> bool:
    """Dedekind criterion: is Z[x]/(f) maximal at p?  f must be irreducible
    (caller-certified unless verify_irreducible is set)."""
    if verify_irreducible and not intpoly.is_irreducible_q(f.to_intpoly()):
        raise ValueError("Dedekind test requires an irreducible polynomial")
    return _dedekind_unchecked(f, p)


@dataclass(frozen=True)
class PrimeRecord:
    p: int
    v_p_disc_f: int
    dedekind_p_maximal: bool
    v_p_disc_K: int | None


@dataclass(frozen=True)
class FieldDiscCertificate:
    """Per-prime ramification data for K = Q[x]/(f), Dedekind-certified.

    D is |Disc K| when status == "exact", otherwise the product over resolved
    primes only (a lower bound).  C is the product of certified-ramified
    primes; it is complete exactly when status == "exact".
    """

    records: tuple[PrimeRecord, ...]
    D: int
    C: int
    status: str  # "exact" | "partial"

    @property
    def is_exact(self) -> bool:
        return self.status == "exact"


def field_disc_certificate(f: MonicIntPoly) -> FieldDiscCertificate:
    """Certificate for |Disc(K_f)| from the Dedekind criterion.

    A p-maximal prime keeps v_p(Disc K) = v_p(Disc f).  A non-maximal prime
    drops the valuation by twice the index valuation, so v_p(Disc f) <= 3
    still forces the exact value; higher valuations are left unresolved and
    the certificate is marked partial.
    """
    fz = f.to_intpoly()
    if not intpoly.is_irreducible_q(fz):
        raise ValueError("field discriminant certificate requires irreducible input")
    disc = intpoly.discriminant(fz)
    records = []
    for p, e in arith.factorize(disc):
        if e == 1:
            # Disc f / Disc K is a square, so an exponent-1 prime is automatic
            records.append(PrimeRecord(p, 1, True, 1))
            continue
        maximal = _dedekind_unchecked(f, p)
        if maximal:
            v_k: int | None = e
        elif e - 2 <= 1:
            v_k = e - 2  # index valuation is forced to be exactly 1
        else:
            v_k = None
        records.append(PrimeRecord(p, e, maximal, v_k))
    status = "exact" if all(r.v_p_disc_K is not None for r in records) else "partial"
    D = 1
    C = 1
    for r in records:
        if r.v_p_disc_K:
            D *= r.p ** r.v_p_disc_K
            C *= r.p
    return FieldDiscCertificate(records=tuple(records), D=D, C=C, status=status)


# ----------------------------------------------------------------------------
# irreducibility with a cheap modular screen
# ----------------------------------------------------------------------------

_SCREEN_PRIMES = arith.primes_up_to(300)


def _screen_and_patterns(fz: IntPoly, disc: int, tries: int = 15):
    """(irreducible_prime | None, {pattern: prime}) from small-prime patterns."""
    n = fz.degree
    samples: dict[tuple[int, ...], int] = {}
    used = 0
    for p in _SCREEN_PRIMES:
        if used >= tries:
            break
        if disc % p == 0:
            continue
        used += 1
        pat = factor_pattern_mod_p(fz.coeffs, p)
        samples.setdefault(pat, p)
        if pat == (n,):
            return p, samples
    return None, samples


# ----------------------------------------------------------------------------
# per-degree irreducible classification cores
# ----------------------------------------------------------------------------

def classify_irreducible_quartic(a: int, b: int, c: int, d: int, disc: int) -> tuple[str, str]:
    """Kappe-Warren tree for irreducible x^4+ax^3+bx^2+cx+d; returns (name, note)."""
    res = IntPoly((-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1))
    roots = integer_roots(res)
    if not roots:
        if arith.is_perfect_square(disc):
            return "A4", "resolvent irreducible, square disc"
        return "S4", "resolvent irreducible, nonsquare disc"
    if len(roots) == 3:
        return "V4", f"resolvent splits at {roots}"
    beta = roots[0]
    t1 = beta * beta - 4 * d
    t2 = a * a - 4 * (b - beta)

    def square_in_qd(t: int) -> bool:
        return arith.is_perfect_square(t) or arith.is_perfect_square(t * disc)

    if square_in_qd(t1) and square_in_qd(t2):
        return "C4", f"resolvent root {beta}; both quadratics split over Q(sqrt D)"
    return "D4", f"resolvent root {beta}"


def quintic_resolvent(P: int, Q: int, R: int, S: int) -> IntPoly:
    """Degree-6 solvability resolvent of x^5 + P x^3 + Q x^2 + R x + S."""
    coeffs = []
    for j in range(6):
        v = 0
        for coef, (ep, eq, er, es) in QUINTIC_RESOLVENT_TERMS[j]:
            v += coef * P ** ep * Q ** eq * R ** er * S ** es
        coeffs.append(v)
    return IntPoly(tuple(coeffs) + (1,))


def depressed_quintic(f: MonicIntPoly) -> tuple[int, int, int, int]:
    """Integral depressed form: 5^5 f((y - a_1)/5) = y^5 + P y^3 + Q y^2 + R y + S."""
    if f.n != 5:
        raise ValueError("need a quintic")
    a1 = f.a[0]
    base = IntPoly((-a1, 1))  # y - a_1
    out = IntPoly(())
    coeffs = f.to_intpoly().coeffs  # low-first, length 6
    for i in range(6):
        out = out + base ** i * (coeffs[i] * 5 ** (5 - i))
    assert out.degree == 5 and out.is_monic and out.coeffs[4] == 0
    return out.coeffs[3], out.coeffs[2], out.coeffs[1], out.coeffs[0]


def classify_irreducible_quintic(f: MonicIntPoly, disc: int, prime_bound: int,
                                 patterns: dict[tuple[int, ...], int] | None = None):
    """(name, certainty, notes) for an irreducible quintic."""
    work = f
    shift_used = 0
    for attempt in range(30):
        P, Q, R, S = depressed_quintic(work)
        f20 = quintic_resolvent(P, Q, R, S)
        if intpoly.poly_gcd_z(f20, f20.derivative()).degree == 0:
            break
        shift_used = (attempt + 2) // 2 * (1 if attempt % 2 == 0 else -1)
        work = MonicIntPoly.from_intpoly(f.to_intpoly().shift_x(shift_used))
    else:
        raise RuntimeError("no squarefree resolvent found in 30 translates")
    roots = integer_roots(f20)
    notes = [f"resolvent_root:{roots[0] if roots else 'none'}"]
    if shift_used:
        notes.append(f"translate:{shift_used}")
    disc_sq = arith.is_perfect_square(disc)
    if not roots:
        return ("A5" if disc_sq else "S5"), CERTIFIED, notes
    if not disc_sq:
        return "F20", CERTIFIED, notes
    # D5 vs C5: look for the (2,2,1) Frobenius type
    target = (2, 2, 1)
    if patterns and target in patterns:
        notes.append(f"cycle:2+2+1@{patterns[target]}")
        return "D5", CERTIFIED, notes
    fz = f.to_intpoly()
    for p in arith.primes_up_to(prime_bound):
        if disc % p == 0:
            continue
        if factor_pattern_mod_p(fz.coeffs, p) == target:
            notes.append(f"cycle:2+2+1@{p}")
            return "D5", CERTIFIED, notes
    notes.append(f"no 2+2+1 up to {prime_bound}")
    return "C5", HEURISTIC, notes


def _classify_irreducible_67(f: MonicIntPoly, disc: int, prime_bound: int,
                             patterns: dict[tuple[int, ...], int]):
    n = f.n
    if arith.is_perfect_square(disc):
        return f"in_A{n}", CERTIFIED, ["disc is a perfect square"]
    need_trans = grouptables.transposition_type(n)
    need_cycle = grouptables.n_minus_one_cycle_type(n)
    fz = f.to_intpoly()
    seen = dict(patterns)
    if need_trans not in seen or need_cycle not in seen:
        start_after = max(seen.values(), default=1)
        for p in arith.primes_up_to(prime_bound):
            if p <= start_after or disc % p == 0:
                continue
            pat = factor_pattern_mod_p(fz.coeffs, p)
            seen.setdefault(pat, p)
            if need_trans in seen and need_cycle in seen:
                break
    if need_trans in seen and need_cycle in seen:
        notes = [f"cycle:{'+'.join(map(str, need_cycle))}@{seen[need_cycle]}",
                 f"cycle:{'+'.join(map(str, need_trans))}@{seen[need_trans]}"]
        return f"S{n}", CERTIFIED, notes
    return UNKNOWN, UNDECIDED, [f"prime_bound:{prime_bound}",
                                f"types:{_fmt_types(seen)}"]


# ----------------------------------------------------------------------------
# the classifier
# ----------------------------------------------------------------------------

def classify(f: MonicIntPoly | IntPoly, opts: ClassifyOptions = DEFAULT_OPTIONS) -> GaloisLabel:
    """Galois group label for a polynomial of degree 1..7 (see module docstring).

    Reducible, inseparable and (in non-monic mode) degree-dropped polynomials
    are labelled by factorization shape and count as non-S_n.
    """
    if isinstance(f, MonicIntPoly):
        return _classify_monic(f, opts)
    if not opts.non_monic:
        if f.is_monic and f.degree >= 1:
            return _classify_monic(MonicIntPoly.from_intpoly(f), opts)
        raise ValueError("monic mode requires a monic polynomial")
    # non-monic mode
    if f.degree < 1:
        return GaloisLabel(degree=0, group_name="degenerate", certainty=CERTIFIED,
                           counts_as=NON_SN, is_primitive=False,
                           evidence=(("degenerate", "degree drop"),))
    n = f.degree
    if n > 7:
        raise UnsupportedDegreeError(f"degree {n} unsupported")
    a0 = f.lc
    if a0 == 1:
        return _classify_monic(MonicIntPoly.from_intpoly(f), opts)
    # monic normalization a0^{n-1} f(x/a0) preserves the splitting field
    b = tuple(f.coeffs[n - i] * a0 ** (i - 1) for i in range(1, n + 1))
    label = _classify_monic(MonicIntPoly(n, b), opts)
    return replace(label, evidence=label.evidence + (("normalized", f"lc {a0}"),))


def _classify_monic(f: MonicIntPoly, opts: ClassifyOptions) -> GaloisLabel:
    n = f.n
    if n > 7:
        raise UnsupportedDegreeError(f"degree {n} unsupported")
    if n == 1:
        return _table_label(1, "S1", CERTIFIED, [("linear", "trivial group")])
    fz = f.to_intpoly()
    disc = intpoly.discriminant(fz)
    evidence: list[tuple[str, str]] = [("disc", str(disc))]

    if disc == 0:
        degrees = intpoly.factor_over_Q(fz).degrees
        return _shape_label(n, degrees, evidence + [("inseparable", "disc = 0")])

    irr_prime, patterns = _screen_and_patterns(fz, disc)
    if irr_prime is not None:
        evidence.append(("irreducible", f"mod {irr_prime}"))
    else:
        fac = intpoly.factor_over_Q(fz)
        if len(fac.factors) > 1 or fac.factors[0][1] > 1:
            return _shape_label(n, fac.degrees, evidence + [("factored", "over Q")])
        evidence.append(("irreducible", "factorization over Q"))

    disc_sq = arith.is_perfect_square(disc)
    evidence.append(("disc_square", str(disc_sq)))

    if n == 2:
        # square disc would mean rational roots, contradicting irreducibility
        return _table_label(2, "S2", CERTIFIED, evidence)
    if n == 3:
        return _table_label(3, "C3" if disc_sq else "S3", CERTIFIED, evidence)
    if n == 4:
        a, b, c, d = f.a
        name, note = classify_irreducible_quartic(a, b, c, d, disc)
        return _table_label(4, name, CERTIFIED, evidence + [("resolvent", note)])
    if n == 5:
        name, certainty, notes = classify_irreducible_quintic(
            f, disc, opts.prime_bound, patterns)
        return _table_label(5, name, certainty,
                            evidence + [("resolvent", notes[0])]
                            + [("note", x) for x in notes[1:]])
    name, certainty, notes = _classify_irreducible_67(f, disc, opts.prime_bound, patterns)
    ev = evidence + [("note", x) for x in notes]
    if name == UNKNOWN:
        return GaloisLabel(degree=n, group_name=UNKNOWN, certainty=UNDECIDED,
                           counts_as=UNDECIDED, is_primitive=None, evidence=tuple(ev))
    if name.startswith("in_A"):
        return GaloisLabel(degree=n, group_name=name, certainty=CERTIFIED,
                           counts_as=NON_SN, is_primitive=None, evidence=tuple(ev))
    return _table_label(n, name, certainty, ev)


def group_table(n: int) -> tuple[grouptables.GroupTableEntry, ...]:
    """Static table of the transitive groups of degree n (n <= 7)."""
    return grouptables.group_table(n)
