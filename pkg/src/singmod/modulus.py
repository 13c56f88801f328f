"""From g_n to the singular modulus k_n, numerically and as exact unit products.

The quadratic 1/k - k = 2 g^12 is solved by splitting the exact expansion of
g^12 into halves S1 + S2 carried by an index-2 radicand subgroup, recovering
the quartet a, b, c, d with

    sqrt(alpha) = sqrt(ab) + sqrt((a+1)(b-1)),
    sqrt(beta)  = sqrt(cd) + sqrt((c-1)(d-1)),
    alpha*beta = S1^2,  (alpha+1)(beta-1) = S2^2,

and assembling the root in (0, 1) as

    k = (sqrt(a+1) - sqrt(a))(sqrt(b) - sqrt(b-1))(sqrt(c) - sqrt(c-1))(sqrt(d) - sqrt(d-1)).

Every intermediate square root is an exact surd, so the defining equation is
verified by exact arithmetic; each difference factor is then rewritten as a
product of fundamental quadratic units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import mpmath as mp

from . import arith, highprec, weber
from .surd import (
    NotASquareError,
    SurdElement,
    UnitProduct,
    exact_sqrt,
    field_norm,
)

_GUARD = 12


def k_from_g_numeric(g, prec: int = 50):
    """k = g^6 (sqrt(g^12 + g^-12) - g^6), the root of 1/k - k = 2 g^12 in (0, 1)."""
    with mp.workdps(prec + _GUARD):
        g = mp.mpf(g)
        if g <= 0:
            raise ValueError("g must be positive")
        g6 = g**6
        return g6 * (mp.sqrt(g6 * g6 + 1 / (g6 * g6)) - g6)


def split_even_odd(g12: SurdElement) -> tuple[SurdElement, SurdElement]:
    """Split by radicand parity; the rational part joins the odd side."""
    odd = {d: c for d, c in g12.terms.items() if d % 2 == 1}
    even = {d: c for d, c in g12.terms.items() if d % 2 == 0}
    return SurdElement(odd), SurdElement(even)


def subgroup_splits(g12: SurdElement) -> list[tuple[SurdElement, SurdElement]]:
    """Bipartitions of g12 along index-<=2 subgroups of its radicand group.

    A workable split keeps S1 (with the rational part) on a subgroup H and S2
    on the complementary coset, so S1^2, S2^2 and the alpha, beta they define
    all live in Q(H).  The radicand-parity split comes first when it is one of
    the candidates.
    """
    primes = set()
    for d in g12.radicands:
        primes.update(arith.factorize(d))
    primes = sorted(primes)
    masks = {}
    for d in g12.radicands:
        m = 0
        for i, p in enumerate(primes):
            if d % p == 0:
                m |= 1 << i
        masks[d] = m
    seen = set()
    candidates = []
    for functional in range(1 << len(primes)):
        keep = frozenset(d for d in g12.radicands if bin(masks[d] & functional).count("1") % 2 == 0)
        if keep in seen or 1 not in keep:
            continue
        seen.add(keep)
        s1 = SurdElement({d: c for d, c in g12.terms.items() if d in keep})
        candidates.append((s1, g12 - s1))
    parity = split_even_odd(g12)
    candidates.sort(key=lambda pair: (pair[0] != parity[0], sorted(pair[0].radicands)))
    return candidates


def solve_pair_product(p: SurdElement, q: SurdElement, **sqrt_opts) -> tuple[SurdElement, SurdElement]:
    """Solve uv = p, (u+1)(v-1) = q exactly, or NotASquareError.

    u - v = p - q - 1 is forced, and u is taken as the positive root of the
    quadratic, so u >= v whenever q <= p - 1.
    """
    diff = p - q - 1  # u - v
    root = exact_sqrt(diff * diff + 4 * p, **sqrt_opts)
    u = (diff + root) / 2
    return u, u - diff


def solve_pair_product_sym(p: SurdElement, q: SurdElement, **sqrt_opts) -> tuple[SurdElement, SurdElement]:
    """Solve uv = p, (u-1)(v-1) = q with u the larger member; exact or NotASquareError."""
    total = p - q + 1  # u + v
    root = exact_sqrt(total * total - 4 * p, **sqrt_opts)
    u = (total + root) / 2
    return u, total - u


@dataclass
class DescentWitness:
    """The intermediates of one successful descent from g^12 to k."""

    s1: SurdElement
    s2: SurdElement
    alpha: SurdElement
    beta: SurdElement
    a: SurdElement
    b: SurdElement
    c: SurdElement
    d: SurdElement

    def verify(self) -> bool:
        if self.alpha * self.beta != self.s1 * self.s1:
            return False
        if (self.alpha + 1) * (self.beta - 1) != self.s2 * self.s2:
            return False
        ab = self.a * self.b
        ab1 = (self.a + 1) * (self.b - 1)
        if ab + ab1 + 2 * exact_sqrt(ab * ab1) != self.alpha:
            return False
        cd = self.c * self.d
        cd1 = (self.c - 1) * (self.d - 1)
        return cd + cd1 + 2 * exact_sqrt(cd * cd1) == self.beta


def _term_bipartitions(x: SurdElement):
    """Unordered bipartitions (T1, T2) of x's terms, most balanced first.

    T2 may be empty (the degenerate v = 1 case comes last); even bipartitions
    are deduplicated by pinning the smallest radicand into T2's complement.
    """
    rads = sorted(x.radicands)
    out = []
    for r in range(len(rads) // 2, -1, -1):
        for combo in combinations(rads, r):
            if 2 * r == len(rads) and rads[0] in combo:
                continue
            t2 = SurdElement({d: x.coefficient(d) for d in combo})
            t1 = x - t2
            if t1.is_zero():
                continue
            out.append((t1, t2))
    return out


def _quartet(root: SurdElement, shifted_up: bool, sqrt_opts):
    """Split sqrt(alpha) (or sqrt(beta)) into two halves and solve the pair.

    Returns (minus1, minus2, plus1, plus2, u, v) where minus/plus are the
    difference and sum factors sqrt(X) -+ sqrt(X - 1) built from the solved
    pair; tries every bipartition, larger half taken as the plain product side
    first.
    """
    last_err = None
    for t1, t2 in _term_bipartitions(root):
        if t2.is_zero():
            halves = ((t1, t2),)
        elif t1.evalf(40) >= t2.evalf(40):
            halves = ((t1, t2), (t2, t1))
        else:
            halves = ((t2, t1), (t1, t2))
        for big, small in halves:
            try:
                p, q = big * big, small * small
                if shifted_up:
                    u, v = solve_pair_product(p, q, **sqrt_opts)
                else:
                    u, v = solve_pair_product_sym(p, q, **sqrt_opts)
                if (u - v).sign() < 0 or (v - 1).sign() < 0:
                    raise NotASquareError("pair solution out of order")
                ru = exact_sqrt(u, **sqrt_opts)
                ru1 = exact_sqrt(u + 1 if shifted_up else u - 1, **sqrt_opts)
                rv = exact_sqrt(v, **sqrt_opts)
                rv1 = exact_sqrt(v - 1, **sqrt_opts)
                if shifted_up:
                    return ru1 - ru, rv - rv1, ru1 + ru, rv + rv1, u, v
                return ru - ru1, rv - rv1, ru + ru1, rv + rv1, u, v
            except NotASquareError as err:
                last_err = err
    raise last_err or NotASquareError(f"no workable bipartition of {root}")


def quartet_roots(s1: SurdElement, s2: SurdElement, ambient_primes=None):
    """Both roots of 1/x - x = 2 (s1 + s2) via the a, b, c, d quartet.

    Returns (x1, x2, factors, witness): x1 in (0, 1) as an exact surd, x2 the
    companion root with x1 * x2 = -1 exactly, factors the four-difference unit
    product, witness the recovered intermediates.  The defining quadratic is
    checked exactly before returning.
    """
    sqrt_opts = {"ambient_primes": ambient_primes}
    p, q = s1 * s1, s2 * s2
    alpha, beta = solve_pair_product(p, q, **sqrt_opts)
    root_alpha = exact_sqrt(alpha, **sqrt_opts)
    root_beta = exact_sqrt(beta, **sqrt_opts)
    f1, f2, p1, p2, a, b = _quartet(root_alpha, True, sqrt_opts)
    f3, f4, p3, p4, c, d = _quartet(root_beta, False, sqrt_opts)
    x1 = f1 * f2 * f3 * f4
    x2 = -(p1 * p2 * p3 * p4)
    if x1 * x2 != SurdElement(-1):
        raise NotASquareError("quartet roots do not multiply to -1")
    if x1.inverse() - x1 != 2 * (s1 + s2):
        raise NotASquareError("quartet root fails its defining quadratic")
    witness = DescentWitness(s1, s2, alpha, beta, a, b, c, d)
    factors = UnitProduct([(f1, 1), (f2, 1), (f3, 1), (f4, 1)])
    return x1, x2, factors, witness


def alpha_from_unit_pair(u: SurdElement, v: SurdElement, ambient_primes=None) -> tuple[SurdElement, UnitProduct]:
    """alpha from uv = g^6 via 2U = u^2 + u^-2, 2V = v^2 + v^-2.

    W = sqrt(U^2 + V^2 - 1), 2S = U + V + W + 1, and alpha is the product of
    (sqrt(S - X) - sqrt(S - X - 1))^2 over X in {0, U, V, W}.  All roots exact.
    """
    sqrt_opts = {"ambient_primes": ambient_primes}
    U = (u * u + (u * u).inverse()) / 2
    V = (v * v + (v * v).inverse()) / 2
    W = exact_sqrt(U * U + V * V - 1, **sqrt_opts)
    S = (U + V + W + 1) / 2
    pieces = []
    for X in (SurdElement(0), U, V, W):
        hi = exact_sqrt(S - X, **sqrt_opts)
        lo = exact_sqrt(S - X - 1, **sqrt_opts)
        pieces.append(hi - lo)
    alpha = SurdElement(1)
    for f in pieces:
        alpha = alpha * (f * f)
    return alpha, UnitProduct([(f, 2) for f in pieces])


# -- reduction of difference factors to fundamental units -------------------


def _two_term_units(limit: int, radicands) -> list[SurdElement]:
    """Units p sqrt(r1) - q sqrt(r2), value in (0, 1), with |p^2 r1 - q^2 r2| = 1."""
    out = {}
    for r1, r2 in combinations(sorted(set(radicands)), 2):
        q = 1
        while q * q * r2 <= limit:
            for target in (q * q * r2 + 1, q * q * r2 - 1):
                if target <= 0 or target % r1:
                    continue
                p = math.isqrt(target // r1)
                if p == 0 or p * p * r1 != target:
                    continue
                lhs, rhs = SurdElement({r1: p}), SurdElement({r2: q})
                u = lhs - rhs if p * p * r1 > q * q * r2 else rhs - lhs
                if u != SurdElement(1) and not u.is_zero():
                    out[tuple(u.terms.items())] = u
            q += 1
    return list(out.values())


def _unit_dfs(remainder: SurdElement, candidates, depth: int, memo: set):
    """Peel candidate units off `remainder` by exact division, largest first."""
    if remainder == SurdElement(1):
        return []
    if depth == 0:
        return None
    key = tuple(sorted(remainder.terms.items()))
    if key in memo:
        return None
    r_val = remainder.evalf(40)
    for u, u_val in candidates:
        if u_val < r_val * (1 - mp.mpf("1e-25")):
            continue
        quotient = remainder / u
        if quotient == SurdElement(1):
            return [u]
        if not 0 < quotient.evalf(40) < 1:
            continue
        rest = _unit_dfs(quotient, candidates, depth - 1, memo)
        if rest is not None:
            return [u] + rest
    memo.add(key)
    return None


def _integer_square_root_unit(u: SurdElement):
    """w = p sqrt(r1) - q sqrt(r2) with integer p, q and w^2 = u, or None."""
    terms = u.terms
    if len(terms) != 2 or 1 not in terms:
        return None
    A = terms[1]
    M = next(d for d in terms if d != 1)
    B = -terms[M]
    if A <= 0 or B <= 0 or A.denominator != 1 or B.denominator != 1:
        return None
    A, B = int(A), int(B)
    if B % 2:
        return None
    for r1 in arith.divisors(M):
        r2 = M // r1
        if r1 > r2 or not arith.is_squarefree(r1) or not arith.is_squarefree(r2):
            continue
        pq = B // 2
        for p in arith.divisors(pq):
            q = pq // p
            if p * p * r1 + q * q * r2 == A:
                w = SurdElement({r1: p}) - SurdElement({r2: q})
                if w.sign() < 0:
                    w = -w
                if w * w == u:
                    return w
    return None


def _radicand_group(rads) -> set[int]:
    group = {1}
    for d in rads:
        group.update({(g // math.gcd(g, d)) * (d // math.gcd(g, d)) for g in group})
    return group


def factor_into_units(product: UnitProduct, two_n: int) -> tuple[UnitProduct, bool]:
    """Rewrite each multi-term factor as a product of fundamental quadratic units.

    Two-term unit factors (the sqrt(X) - sqrt(X-1) shapes that are already
    simple) pass through untouched.  Larger factors are peeled by exact
    division with candidate units p sqrt(r1) - q sqrt(r2), |p^2 r1 - q^2 r2|
    = 1, drawn from the factor's own radicand group inside the divisors of 2n
    (largest value first, depth-limited backtracking); squares of
    integer-coefficient units in the result are recognized afterwards.
    Factors that resist recognition are kept unchanged and flagged by a False
    second slot.
    """
    out = UnitProduct()
    complete = True
    for base, exp in product.factors:
        if base.is_rational():
            if base != SurdElement(1):
                out = out * UnitProduct([(base, exp)])
            continue
        if len(base.terms) <= 2 and abs(field_norm(base)) == 1:
            out = out * UnitProduct([(base, exp)])
            continue
        group = _radicand_group(base.radicands)
        rads = sorted(group & {d for d in arith.divisors(two_n) if arith.is_squarefree(d)})
        height = max(float(abs(c)) * math.sqrt(d) for d, c in base.terms.items())
        limit = int(64 * height * height) + 64
        cands = []
        for u in _two_term_units(limit, rads):
            val = u.evalf(40)
            if 0 < val < 1:
                cands.append((u, val))
        cands.sort(key=lambda t: -t[1])
        found = _unit_dfs(base, cands, 8, set())
        if found is None:
            out = out * UnitProduct([(base, exp)])
            complete = False
            continue
        for u in found:
            w = _integer_square_root_unit(u)
            if w is not None:
                out = out * UnitProduct([(w, 2 * exp)])
            else:
                out = out * UnitProduct([(u, exp)])
    return out, complete


# -- closed forms for n = 2, 3, 7 and the full pipeline ----------------------


@dataclass
class SingularModulus:
    """The modulus k_n with its exact forms when the descent succeeds."""

    n: int
    k_numeric: mp.mpf
    alpha_numeric: mp.mpf
    ratio_residual: mp.mpf
    k_surd: SurdElement | None = None
    k_product: UnitProduct | None = None
    g_product: UnitProduct | None = None
    witness: DescentWitness | None = None
    simplified: bool = False


def verify_ratio(alpha, n, prec: int = 50):
    """Residual F(1 - alpha)/F(alpha) - sqrt(n), via AGM elliptic integrals."""
    with mp.workdps(prec + _GUARD):
        if isinstance(alpha, SurdElement):
            alpha = alpha.evalf()
        elif isinstance(alpha, Fraction):
            alpha = mp.mpf(alpha.numerator) / alpha.denominator
        return highprec.verify_ratio_value(mp.mpf(alpha), prec) - mp.sqrt(n)


def small_modulus(n: int, prec: int = 50) -> SingularModulus:
    """Closed forms from the modular equations of degrees 2, 3, 7."""
    quarter = Fraction(1, 4)
    if n == 2:
        k = SurdElement({1: -1, 2: 1})
    elif n == 3:
        k = SurdElement({6: quarter, 2: -quarter})
    elif n == 7:
        k = SurdElement({2: Fraction(3, 8), 14: -Fraction(1, 8)})
    else:
        raise ValueError(f"no small closed form for n = {n}")
    with mp.workdps(prec + _GUARD):
        kv = k.evalf()
        av = kv * kv
        res = verify_ratio(av, n, prec)
    return SingularModulus(n, kv, av, res, k_surd=k)


def _pipeline_applicable(n: int) -> bool:
    return n % 2 == 0 and (n // 2) % 2 == 1 and arith.is_squarefree(n // 2)


def singular_modulus(n: int, prec: int = 50) -> SingularModulus:
    """The modulus with K(k')/K(k) = sqrt(n); exact descent where available.

    For n = 2 mod 4 with n/2 squarefree the full chain runs: exact g^12 from
    the unit-product for g_n, subgroup splits, the a, b, c, d quartet, exact
    root verification, and reduction of the four factors to fundamental units.
    n = 3 and n = 7 use their closed forms; other n are solved numerically.
    """
    if n in (3, 7):
        return small_modulus(n, prec)
    if not _pipeline_applicable(n):
        return _numeric_modulus(n, prec)
    g_product, _ = weber.g2n(n // 2, max(prec, 60))
    g12 = (g_product**12).expand_exact()
    two_n = 2 * n
    ambient = tuple(arith.factorize(two_n))
    last_err: Exception | None = None
    for s1, s2 in subgroup_splits(g12):
        try:
            x1, _, factors, witness = quartet_roots(s1, s2, ambient_primes=ambient)
        except NotASquareError as err:
            last_err = err
            continue
        simplified, complete = factor_into_units(factors, two_n)
        with mp.workdps(prec + _GUARD):
            kv = x1.evalf()
            av = kv * kv
            res = verify_ratio(av, n, prec)
        return SingularModulus(
            n,
            kv,
            av,
            res,
            k_surd=x1,
            k_product=simplified if complete else factors,
            g_product=g_product,
            witness=witness,
            simplified=complete,
        )
    raise last_err or NotASquareError(f"no split of g^12 worked for n = {n}")


def _numeric_modulus(n, prec: int = 50) -> SingularModulus:
    """Numeric-only modulus through the q-series for g_n and the root formula."""
    with mp.workdps(prec + _GUARD):
        g = highprec.gn_numeric(n, prec + _GUARD)
        k = k_from_g_numeric(g, prec)
        res = verify_ratio(k * k, n, prec)
        return SingularModulus(n, k, k * k, res)
