"""Exact arithmetic in real multiquadratic fields Q(sqrt(p1), ..., sqrt(pr)).

Elements are finite sums  sum_d c_d * sqrt(d)  with squarefree radicands d >= 1
and rational coefficients c_d (d = 1 is the rational part).  The representation
is canonical -- radicands reduced to their squarefree kernel, zero coefficients
dropped -- so equality is structural.  Square roots of totally positive
elements are reconstructed exactly from numerical conjugate data and verified
by exact multiplication.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product as iter_product

import mpmath as mp

from . import arith


class NotASquareError(ArithmeticError):
    """Raised when no exact square root exists in the searched field."""


def _red_mul(u: int, v: int) -> tuple[int, int]:
    """sqrt(u)*sqrt(v) = g*sqrt(w) for squarefree u, v; returns (g, w)."""
    g = math.gcd(u, v)
    return g, (u // g) * (v // g)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


class SurdElement:
    """Immutable exact element of a multiquadratic field."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean: dict[int, Fraction] = {}
        if terms is None:
            terms = {}
        if isinstance(terms, (int, Fraction)):
            terms = {1: terms}
        for rad, coef in terms.items():
            coef = _as_fraction(coef)
            if coef == 0:
                continue
            if rad < 1:
                raise ValueError(f"radicand must be positive, got {rad}")
            s, d = arith.squarefree_decompose(rad)
            clean[d] = clean.get(d, Fraction(0)) + coef * s
        self._terms = {d: c for d, c in sorted(clean.items()) if c != 0}
        self._hash = None

    # -- basic structure -------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @property
    def radicands(self) -> tuple[int, ...]:
        return tuple(self._terms)

    def coefficient(self, rad: int) -> Fraction:
        return self._terms.get(rad, Fraction(0))

    @property
    def rational_part(self) -> Fraction:
        return self._terms.get(1, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(d == 1 for d in self._terms)

    def prime_support(self) -> tuple[int, ...]:
        primes: set[int] = set()
        for d in self._terms:
            primes.update(arith.factorize(d))
        return tuple(sorted(primes))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SurdElement(other)
        if not isinstance(other, SurdElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other) -> "SurdElement":
        if isinstance(other, (int, Fraction)):
            other = SurdElement(other)
        if not isinstance(other, SurdElement):
            return NotImplemented
        out = dict(self._terms)
        for d, c in other._terms.items():
            out[d] = out.get(d, Fraction(0)) + c
        return SurdElement(out)

    __radd__ = __add__

    def __neg__(self) -> "SurdElement":
        return SurdElement({d: -c for d, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, SurdElement) else -SurdElement(other))

    def __rsub__(self, other):
        return SurdElement(other) - self

    def __mul__(self, other) -> "SurdElement":
        if isinstance(other, (int, Fraction)):
            return SurdElement({d: c * other for d, c in self._terms.items()})
        if not isinstance(other, SurdElement):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                g, w = _red_mul(d1, d2)
                out[w] = out.get(w, Fraction(0)) + c1 * c2 * g
        return SurdElement(out)

    __rmul__ = __mul__

    def conjugate(self, prime: int) -> "SurdElement":
        """Flip the sign of sqrt(prime) in every radicand containing it."""
        return SurdElement(
            {d: (-c if d % prime == 0 else c) for d, c in self._terms.items()}
        )

    def inverse(self) -> "SurdElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero surd")
        partial = self
        mult = SurdElement(1)
        for p in self.prime_support():
            if all(d % p != 0 for d in partial._terms):
                continue
            conj = partial.conjugate(p)
            mult = mult * conj
            partial = partial * conj
        if not partial.is_rational():
            raise ArithmeticError("conjugate tower failed to rationalize")
        return mult * (Fraction(1) / partial.rational_part)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _as_fraction(other))
        if isinstance(other, SurdElement):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return SurdElement(other) * self.inverse()

    def __pow__(self, n: int) -> "SurdElement":
        if not isinstance(n, int):
            raise TypeError("surd powers must be integers; use UnitProduct for rational exponents")
        if n < 0:
            return self.inverse() ** (-n)
        result = SurdElement(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- numerics ---------------------------------------------------------

    def evalf(self, dps: int | None = None):
        """Numeric value under the identity embedding."""
        if dps is not None:
            with mp.workdps(dps):
                return self.evalf()
        total = mp.mpf(0)
        for d, c in self._terms.items():
            total += mp.mpf(c.numerator) / c.denominator * mp.sqrt(d)
        return total

    def embed(self, signs: dict[int, int], dps: int | None = None):
        """Numeric value with sqrt(p) -> signs[p]*sqrt(p) for each generator prime."""
        if dps is not None:
            with mp.workdps(dps):
                return self.embed(signs)
        total = mp.mpf(0)
        for d, c in self._terms.items():
            sign = 1
            for p, s in signs.items():
                if d % p == 0 and s < 0:
                    sign = -sign
            total += sign * mp.mpf(c.numerator) / c.denominator * mp.sqrt(d)
        return total

    def sign(self) -> int:
        """Exact sign of the identity embedding."""
        if self.is_zero():
            return 0
        dps = 60
        while dps <= 4000:
            with mp.workdps(dps):
                v = self.evalf()
                if abs(v) > mp.mpf(10) ** (10 - dps):
                    return 1 if v > 0 else -1
            dps *= 4
        raise ArithmeticError(f"cannot resolve sign of {self}")

    def __lt__(self, other):
        other = other if isinstance(other, SurdElement) else SurdElement(other)
        return (self - other).sign() < 0

    def __le__(self, other):
        other = other if isinstance(other, SurdElement) else SurdElement(other)
        return (self - other).sign() <= 0

    def __gt__(self, other):
        other = other if isinstance(other, SurdElement) else SurdElement(other)
        return (self - other).sign() > 0

    def __ge__(self, other):
        other = other if isinstance(other, SurdElement) else SurdElement(other)
        return (self - other).sign() >= 0

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), key=lambda t: (t[1] < 0, t[0]))
        parts = []
        for d, c in ordered:
            mag = abs(c)
            if d == 1:
                body = str(mag)
            elif mag == 1:
                body = f"sqrt({d})"
            else:
                body = f"{mag}*sqrt({d})"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"SurdElement({str(self)!r})"


def parse_surd(text: str) -> SurdElement:
    """Parse the rendering grammar: terms c or c*sqrt(d) joined by +/-."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty surd expression")
    if s == "0":
        return SurdElement()
    tokens = []
    cur = ""
    for ch in s:
        if ch in "+-" and cur and cur[-1] not in "*/(":
            tokens.append(cur)
            cur = ch
        else:
            cur += ch
    tokens.append(cur)
    terms: dict[int, Fraction] = {}
    for tok in tokens:
        sign = 1
        if tok.startswith("-"):
            sign, tok = -1, tok[1:]
        elif tok.startswith("+"):
            tok = tok[1:]
        if "sqrt(" in tok:
            coef_part, _, rad_part = tok.partition("sqrt(")
            coef_part = coef_part.rstrip("*")
            rad = int(rad_part.rstrip(")"))
            coef = Fraction(coef_part) if coef_part else Fraction(1)
        else:
            rad = 1
            coef = Fraction(tok)
        terms[rad] = terms.get(rad, Fraction(0)) + sign * coef
    return SurdElement(terms)


# -- field norm and unit recognition --------------------------------------


def field_norm(x: SurdElement, primes: tuple[int, ...] | None = None) -> Fraction:
    """Product of x over all 2^r sign embeddings of Q(sqrt(p) : p in primes)."""
    if primes is None:
        primes = x.prime_support()
    partial = x
    for p in primes:
        partial = partial * partial.conjugate(p)
    if not partial.is_rational():
        raise ArithmeticError(f"norm of {x} not rational over primes {primes}")
    return partial.rational_part


def as_unit_factor(x: SurdElement):
    """Recognize x = T + U*sqrt(m) with |T^2 - m U^2| = 1; None otherwise."""
    rads = [d for d in x.radicands if d != 1]
    if len(rads) != 1:
        return None
    m = rads[0]
    T, U = x.coefficient(1), x.coefficient(m)
    norm = T * T - m * U * U
    if abs(norm) != 1:
        return None
    return T, U, m, norm


# -- exact square roots -----------------------------------------------------


def _group_span(radicands, primes):
    """GF(2) span of the radicands' prime-support vectors.

    Returns (basis_rads, group) where basis_rads generate the radicand group
    and group maps every squarefree product of basis elements (2^rank of them)
    to its bitmask over the basis.
    """
    prime_index = {p: i for i, p in enumerate(primes)}

    def mask(d: int) -> int:
        m = 0
        for p in arith.factorize(d):
            m |= 1 << prime_index[p]
        return m

    pivots: dict[int, tuple[int, int]] = {}  # pivot bit -> (mask, radicand)
    for d in sorted(set(radicands)):
        v, r = mask(d), d
        while v:
            pb = v.bit_length() - 1
            if pb in pivots:
                pm, pr = pivots[pb]
                v ^= pm
                r = _red_mul(r, pr)[1]
            else:
                pivots[pb] = (v, r)
                break
    basis_rads = [rad for _, (_, rad) in sorted(pivots.items())]
    group = {1: 0}
    for i, b in enumerate(basis_rads):
        for g, m in list(group.items()):
            group[_red_mul(g, b)[1]] = m | (1 << i)
    return basis_rads, group


def _rationalize(value, max_den: int = 2**64):
    """Continued-fraction rounding of an mpf to a bounded-denominator Fraction."""
    tol = mp.mpf(2) ** (-mp.mp.prec // 2)
    p_prev, q_prev, p, q = 1, 0, int(mp.floor(value)), 1
    frac = value - mp.floor(value)
    while abs(value - mp.mpf(p) / q) > tol * max(1, abs(value)):
        if frac == 0 or q > max_den:
            return None
        rec = 1 / frac
        a = int(mp.floor(rec))
        frac = rec - a
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        if q > max_den:
            return None
    return Fraction(p, q)


def _sqrt_in_group(z: SurdElement, decomp: dict[int, int], rank: int, dps: int):
    """Find w supported on the radicand group with w*w == z, or None.

    decomp maps each group radicand to its basis bitmask; the sign of radicand
    u under embedding e is the parity of bits(decomp[u] & e).  Conjugate values
    of z are computed for every sign assignment on the basis; candidate square
    roots are assembled for each consistent choice of signs of sqrt(z)'s
    conjugates, rationalized, and verified exactly.
    """
    n_emb = 1 << rank
    with mp.workdps(dps):
        conj_vals = []
        for e in range(n_emb):
            total = mp.mpf(0)
            for d, c in z.terms.items():
                s = -1 if bin(decomp[d] & e).count("1") % 2 else 1
                total += s * mp.mpf(c.numerator) / c.denominator * mp.sqrt(d)
            conj_vals.append(total)
        tol = mp.mpf(2) ** (-mp.mp.prec // 2)
        if any(v < -tol for v in conj_vals):
            raise NotASquareError(f"{z} is not totally positive")
        roots = [mp.sqrt(abs(v)) for v in conj_vals]
        sqrt_rad = {u: mp.sqrt(u) for u in decomp}
        for pattern in iter_product((1, -1), repeat=n_emb - 1):
            signs = (1,) + pattern
            coeffs = {}
            ok = True
            for u, um in decomp.items():
                acc = mp.mpf(0)
                for e in range(n_emb):
                    s = -1 if bin(um & e).count("1") % 2 else 1
                    acc += s * signs[e] * roots[e]
                val = acc / (n_emb * sqrt_rad[u])
                fr = _rationalize(val)
                if fr is None:
                    ok = False
                    break
                if fr != 0:
                    coeffs[u] = fr
            if not ok:
                continue
            w = SurdElement(coeffs)
            if w * w == z:
                return w
    return None


def exact_sqrt(
    x: SurdElement,
    target_radicands=None,
    ambient_primes=None,
    dps: int = 80,
    retries: int = 4,
) -> SurdElement:
    """Exact square root of a totally positive surd, or NotASquareError.

    The root, if it exists inside the ambient multiquadratic field, has its
    radicands in a single coset t*G of the group G generated by x's radicands;
    for each candidate coset the equation (w*sqrt(t))^2 = x is solved for w
    supported on G by numeric reconstruction plus exact verification.
    `target_radicands` restricts the search to the cosets meeting the targets;
    `ambient_primes` widens the pool of cosets searched.
    """
    if x.is_zero():
        return SurdElement()
    if x.is_rational():
        f = x.rational_part
        if f < 0:
            raise NotASquareError(f"{x} is negative")
        s, d = arith.squarefree_decompose(f.numerator * f.denominator)
        return SurdElement({d: Fraction(s, f.denominator)})

    primes = set(x.prime_support())
    if ambient_primes:
        primes.update(ambient_primes)
    if target_radicands:
        for t in target_radicands:
            primes.update(arith.factorize(t))
    primes = tuple(sorted(primes))
    basis, group = _group_span(x.radicands, primes)
    if len(basis) > 3:
        raise NotASquareError(f"radicand group of rank {len(basis)} too large to search")

    def coset_rep(t: int) -> int:
        return min(_red_mul(t, g)[1] for g in group)

    if target_radicands:
        cosets = sorted({coset_rep(t) for t in target_radicands})
    else:
        reps = set()
        for bits in iter_product((0, 1), repeat=len(primes)):
            t = 1
            for p, b in zip(primes, bits):
                if b:
                    t *= p
            reps.add(coset_rep(t))
        cosets = sorted(reps)

    work = dps
    for _ in range(retries):
        for t in cosets:
            z = x / t
            w = _sqrt_in_group(z, group, len(basis), work)
            if w is not None:
                root = w * SurdElement({t: 1})
                if (root * root) == x:
                    return root
        work *= 2
    raise NotASquareError(f"no exact square root of {x} found (targets {target_radicands})")


# -- formal products of units ----------------------------------------------


class UnitProduct:
    """Formal product of surd bases raised to rational exponents."""

    def __init__(self, factors=None):
        self.factors: list[tuple[SurdElement, Fraction]] = []
        for base, exp in factors or []:
            self._push(base, _as_fraction(exp))

    def _push(self, base: SurdElement, exp: Fraction):
        if exp == 0 or base == SurdElement(1):
            return
        for i, (b, e) in enumerate(self.factors):
            if b == base:
                e2 = e + exp
                if e2 == 0:
                    del self.factors[i]
                else:
                    self.factors[i] = (b, e2)
                return
        self.factors.append((base, exp))

    def __mul__(self, other: "UnitProduct") -> "UnitProduct":
        out = UnitProduct(self.factors)
        for b, e in other.factors:
            out._push(b, e)
        return out

    def __pow__(self, k) -> "UnitProduct":
        k = _as_fraction(k)
        return UnitProduct([(b, e * k) for b, e in self.factors])

    def value(self, dps: int | None = None):
        """Numeric value at the identity embedding."""
        if dps is not None:
            with mp.workdps(dps):
                return self.value()
        total = mp.mpf(1)
        for b, e in self.factors:
            total *= mp.power(b.evalf(), mp.mpf(e.numerator) / e.denominator)
        return total

    def expand_exact(self) -> SurdElement:
        """Multiply out; requires every exponent to be an integer."""
        out = SurdElement(1)
        for b, e in self.factors:
            if e.denominator != 1:
                raise ValueError(f"non-integer exponent {e} cannot be expanded exactly")
            out = out * b ** int(e)
        return out

    def all_unit_norms(self) -> bool:
        return all(abs(field_norm(b)) == 1 for b, _ in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for b, e in self.factors:
            base = f"({b})"
            if e == 1:
                parts.append(base)
            elif e.denominator == 1:
                parts.append(f"{base}^{e}")
            else:
                parts.append(f"{base}^({e})")
        return " * ".join(parts)

    def __repr__(self) -> str:
        return f"UnitProduct({str(self)!r})"
