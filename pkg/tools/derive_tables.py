#!/usr/bin/env python3
"""Dev-time generator for the embedded formula tables in galois_census/_tables.py.

Two artifacts are produced:

1. Discriminant term tables for monic polynomials x^n + a_1 x^{n-1} + ... + a_n,
   n = 2..6, pulled straight out of sympy's discriminant.

2. The degree-6 resolvent of a depressed quintic x^5 + p x^3 + q x^2 + r x + s,
   whose rational-root behaviour decides solvability of the quintic.  The
   resolvent's coefficients are integer polynomials in (p, q, r, s), weighted
   homogeneous with deg(p,q,r,s) = (2,3,4,5).  They are recovered by exact
   interpolation: evaluate the resolvent numerically from high-precision roots
   at many integer sample points, round (certified by a 2-precision agreement
   check), and solve the integer linear system for the monomial coefficients.

Run:  python3 tools/derive_tables.py > src/galois_census/_tables.py
Progress/validation goes to stderr.
"""

import itertools
import random
import sys
from fractions import Fraction

import mpmath
import sympy


def log(*args):
    print(*args, file=sys.stderr)


# ----------------------------------------------------------------------------
# part 1: monic discriminant term tables
# ----------------------------------------------------------------------------

def disc_terms(n):
    x = sympy.Symbol("x")
    a = sympy.symbols(f"a1:{n + 1}")
    f = x**n + sum(a[i] * x**(n - 1 - i) for i in range(n))
    d = sympy.Poly(sympy.discriminant(f, x), *a)
    terms = []
    for monom, coeff in d.terms():
        terms.append((int(coeff), tuple(int(e) for e in monom)))
    terms.sort(key=lambda t: t[1], reverse=True)
    return terms


# ----------------------------------------------------------------------------
# part 2: quintic resolvent via exact interpolation
# ----------------------------------------------------------------------------

# F20-invariant in the five roots; its six conjugates under coset
# representatives of F20 in S5 are the roots of the resolvent.
THETA_PAIRS = [
    (0, (1, 4), (2, 3)),
    (1, (2, 0), (3, 4)),
    (2, (3, 1), (4, 0)),
    (3, (4, 2), (0, 1)),
    (4, (0, 3), (1, 2)),
]


def theta(roots, perm):
    """theta evaluated on roots relabelled by perm (perm[i] = image of i)."""
    y = [roots[perm[i]] for i in range(5)]
    tot = 0
    for i, (j, k), (l, m) in THETA_PAIRS:
        tot += y[i] ** 2 * (y[j] * y[k] + y[l] * y[m])
    return tot


def perm_mul(a, b):
    return tuple(a[b[i]] for i in range(len(b)))


def closure(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                prod = perm_mul(h, g)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return seen


def coset_reps_f20():
    # F20 = <(0 1 2 3 4), (1 2 4 3)> (x -> x+1 and x -> 2x on Z/5)
    c5 = (1, 2, 3, 4, 0)
    m2 = (0, 2, 4, 1, 3)
    f20 = closure([c5, m2], 5)
    assert len(f20) == 20
    s5 = [tuple(p) for p in itertools.permutations(range(5))]
    reps, covered = [], set()
    for g in s5:
        if g in covered:
            continue
        reps.append(g)
        covered.update(perm_mul(h, g) for h in f20)
    assert len(reps) == 6
    # sanity: theta is constant on each coset (symbolic check)
    xs = sympy.symbols("x0:5")
    for g in [c5, m2]:
        lhs = theta(xs, tuple(range(5)))
        rhs = theta(xs, g)
        assert sympy.expand(lhs - rhs) == 0, "theta not F20-invariant"
    return reps


def resolvent_ints(pqrs, reps, dps):
    """Integer coefficient list (degree 6, monic, descending) of prod(y - theta_i)."""
    p, q, r, s = pqrs
    with mpmath.workdps(dps):
        try:
            roots = mpmath.polyroots([1, 0, p, q, r, s], maxsteps=600, extraprec=250)
        except mpmath.libmp.NoConvergence:
            return None
        thetas = [theta(roots, g) for g in reps]
        coeffs = [mpmath.mpc(1)]
        for t in thetas:
            nxt = [mpmath.mpc(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i] += c
                nxt[i + 1] -= c * t
            coeffs = nxt
        out = []
        for c in coeffs:
            ci = int(mpmath.nint(c.real))
            if abs(c.imag) > 0.01 or abs(c.real - ci) > 0.01:
                return None
            out.append(ci)
        return out


def resolvent_ints_checked(pqrs, reps):
    a = resolvent_ints(pqrs, reps, 60)
    if a is None:
        return None  # degenerate sample (e.g. repeated roots); caller resamples
    b = resolvent_ints(pqrs, reps, 120)
    assert a == b, f"rounding unstable at {pqrs}"
    return a


def weighted_monomials(weight):
    out = []
    for al in range(weight // 2 + 1):
        for be in range((weight - 2 * al) // 3 + 1):
            for ga in range((weight - 2 * al - 3 * be) // 4 + 1):
                rest = weight - 2 * al - 3 * be - 4 * ga
                if rest % 5 == 0:
                    out.append((al, be, ga, rest // 5))
    return out


def solve_exact(rows, rhs):
    """Gaussian elimination over Fraction; rows may be overdetermined."""
    m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    ncols = len(rows[0])
    pivots = []
    ri = 0
    for col in range(ncols):
        piv = next((i for i in range(ri, len(m)) if m[i][col] != 0), None)
        if piv is None:
            raise RuntimeError("singular system; add samples")
        m[ri], m[piv] = m[piv], m[ri]
        pv = m[ri][col]
        m[ri] = [v / pv for v in m[ri]]
        for i in range(len(m)):
            if i != ri and m[i][col] != 0:
                fac = m[i][col]
                m[i] = [a - fac * b for a, b in zip(m[i], m[ri])]
        pivots.append(col)
        ri += 1
        if ri == ncols:
            break
    sol = [m[i][-1] for i in range(ncols)]
    # consistency of the leftover equations
    for i in range(ncols, len(m)):
        assert all(v == 0 for v in m[i][:-1]) and m[i][-1] == 0, "inconsistent fit"
    return sol


def derive_resolvent():
    reps = coset_reps_f20()
    rng = random.Random(20240901)
    monos = {j: weighted_monomials(4 * (6 - j)) for j in range(6)}
    need = max(len(v) for v in monos.values()) + 12
    samples = []
    seen = set()
    while len(samples) < need:
        pqrs = tuple(rng.randint(-6, 6) for _ in range(4))
        if pqrs in seen:
            continue
        seen.add(pqrs)
        coeffs = resolvent_ints_checked(pqrs, reps)
        if coeffs is not None:
            samples.append((pqrs, coeffs))
    log(f"resolvent: {len(samples)} certified samples")

    tables = {}
    for j in range(6):
        ms = monos[j]
        rows, rhs = [], []
        for pqrs, coeffs in samples:
            p, q, r, s = pqrs
            rows.append([p**al * q**be * r**ga * s**de for (al, be, ga, de) in ms])
            rhs.append(coeffs[6 - j])  # coeffs descending: index 6-j holds y^j
        sol = solve_exact(rows, rhs)
        terms = []
        for c, mono in zip(sol, ms):
            assert c.denominator == 1, f"non-integer coefficient {c} at {mono}"
            if c != 0:
                terms.append((int(c), mono))
        terms.sort(key=lambda t: t[1], reverse=True)
        tables[j] = terms
        log(f"  c[{j}] : {len(terms)} terms")

    # hold-out validation on fresh samples
    done = 0
    while done < 25:
        pqrs = tuple(rng.randint(-7, 7) for _ in range(4))
        coeffs = resolvent_ints_checked(pqrs, reps)
        if coeffs is None:
            continue
        done += 1
        p, q, r, s = pqrs
        for j in range(6):
            val = sum(c * p**al * q**be * r**ga * s**de
                      for c, (al, be, ga, de) in tables[j])
            assert val == coeffs[6 - j], f"holdout mismatch at {pqrs} j={j}"
    log("resolvent: hold-out validation passed")
    return tables


def fmt_terms(terms, indent="        "):
    lines = []
    for c, mono in terms:
        lines.append(f"{indent}({c}, {mono}),")
    return "\n".join(lines)


def main():
    random.seed(7)
    disc = {}
    for n in range(2, 7):
        disc[n] = disc_terms(n)
        log(f"disc n={n}: {len(disc[n])} terms")

    res = derive_resolvent()

    out = sys.stdout
    out.write('"""Generated formula tables. Regenerate with tools/derive_tables.py.\n\n')
    out.write("DISC_TERMS[n] lists (coeff, (e1..en)) with Disc(x^n + a1 x^{n-1} + ... + an)\n")
    out.write("= sum coeff * prod a_i^{e_i}.  QUINTIC_RESOLVENT_TERMS[j] lists\n")
    out.write("(coeff, (ep, eq, er, es)) for the y^j coefficient of the degree-6\n")
    out.write("resolvent of x^5 + p x^3 + q x^2 + r x + s.\n")
    out.write('"""\n\n')
    out.write("DISC_TERMS = {\n")
    for n in range(2, 7):
        out.write(f"    {n}: (\n{fmt_terms(disc[n])}\n    ),\n")
    out.write("}\n\n")
    out.write("QUINTIC_RESOLVENT_TERMS = {\n")
    for j in range(6):
        out.write(f"    {j}: (\n{fmt_terms(res[j])}\n    ),\n")
    out.write("}\n")
    log("done")


if __name__ == "__main__":
    main()
