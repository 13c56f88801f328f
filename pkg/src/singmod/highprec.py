"""Arbitrary-precision numerics: AGM integrals, q-series, Epstein zeta values.

Every public operation takes a decimal-digit precision and evaluates with
guard digits inside an mpmath working context; returned values are accurate to
roughly the requested number of digits.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath as mp

from . import arith

_GUARD = 12


def _to_mpf(x):
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


def agm(a, b, prec: int = 50):
    """Arithmetic-geometric mean of nonnegative a, b."""
    with mp.workdps(prec + _GUARD):
        x, y = _to_mpf(a), _to_mpf(b)
        if x < 0 or y < 0:
            raise ValueError("agm needs nonnegative arguments")
        if x == 0 or y == 0:
            return mp.mpf(0)
        eps = mp.mpf(2) ** (-mp.mp.prec + 4)
        while abs(x - y) > eps * abs(x):
            x, y = (x + y) / 2, mp.sqrt(x * y)
        return (x + y) / 2


def ell_K(k, prec: int = 50):
    """Complete elliptic integral K(k) = pi / (2 agm(1, sqrt(1 - k^2)))."""
    with mp.workdps(prec + _GUARD):
        k = _to_mpf(k)
        if not 0 <= k < 1:
            raise ValueError(f"modulus must satisfy 0 <= k < 1, got {k}")
        return mp.pi / (2 * agm(mp.mpf(1), mp.sqrt(1 - k * k), prec))


def F_series(alpha, prec: int = 50, max_terms: int = 10**6):
    """Hypergeometric series 1 + (1/2)^2 a + (1*3/(2*4))^2 a^2 + ...

    Returns (partial_sum, tail_bound).  The sum equals (2/pi) K(sqrt(alpha)).
    """
    with mp.workdps(prec + _GUARD):
        a = _to_mpf(alpha)
        if not 0 <= a < 1:
            raise ValueError(f"series needs 0 <= alpha < 1, got {a}")
        eps = mp.mpf(10) ** (-(prec + _GUARD // 2))
        total = mp.mpf(1)
        term = mp.mpf(1)
        k = 0
        while k < max_terms:
            k += 1
            term *= (mp.mpf(2 * k - 1) / (2 * k)) ** 2 * a
            total += term
            if term < eps * (1 - a):
                break
        bound = term * a / (1 - a)
        return total, bound


def verify_ratio_value(alpha, prec: int = 50):
    """F(1 - alpha)/F(alpha) evaluated through the AGM."""
    with mp.workdps(prec + _GUARD):
        a = _to_mpf(alpha)
        return ell_K(mp.sqrt(1 - a), prec) / ell_K(mp.sqrt(a), prec)


def gn_numeric(n, prec: int = 50):
    """Ramanujan's invariant g_n = 2^(-1/4) e^(pi sqrt(n)/24) prod(1 - e^(-(2k-1) pi sqrt(n)))."""
    with mp.workdps(prec + _GUARD):
        x = _to_mpf(n)
        if x <= 0:
            raise ValueError("g_n needs n > 0")
        root = mp.sqrt(x)
        out = mp.power(2, mp.mpf(-0.25)) * mp.exp(mp.pi * root / 24)
        eps = mp.mpf(2) ** (-mp.mp.prec - 8)
        k = 1
        while True:
            f = mp.exp(-(2 * k - 1) * mp.pi * root)
            out *= 1 - f
            if f < eps:
                break
            k += 1
        return out


def eta(omega, prec: int = 50):
    """Dedekind eta(omega) = e^(pi i omega / 12) prod(1 - e^(2 pi i n omega))."""
    with mp.workdps(prec + _GUARD):
        w = mp.mpc(omega)
        if mp.im(w) <= 0:
            raise ValueError("eta needs Im(omega) > 0")
        q = mp.exp(2j * mp.pi * w)
        out = mp.exp(1j * mp.pi * w / 12)
        qn = mp.mpc(1)
        eps = mp.mpf(2) ** (-mp.mp.prec - 8)
        while True:
            qn *= q
            out *= 1 - qn
            if abs(qn) < eps:
                break
        if mp.re(w) == 0:
            return mp.re(out)
        return out


def _sigma3_table(N: int) -> list[int]:
    sig = [0] * (N + 1)
    for d in range(1, N + 1):
        cube = d * d * d
        for mult in range(d, N + 1, d):
            sig[mult] += cube
    return sig


def j_invariant(tau, prec: int = 50):
    """Klein j(tau) from the q-series [1 + 240 sum sigma_3(n) q^n]^3 / (q prod(1-q^n)^24)."""
    with mp.workdps(prec + _GUARD):
        t = mp.mpc(tau)
        if mp.im(t) <= 0:
            raise ValueError("j needs Im(tau) > 0")
        real_axis = mp.re(t) == 0
        q = mp.exp(-2 * mp.pi * mp.im(t)) if real_axis else mp.exp(2j * mp.pi * t)
        # truncation: |q|^N below working epsilon with margin
        N = int((mp.mp.prec + 24) * mp.log(2) / (2 * mp.pi * mp.im(t))) + 2
        sig = _sigma3_table(N)
        e4 = mp.mpf(1) if real_axis else mp.mpc(1)
        delta = q
        qn = q * 0 + 1
        for n in range(1, N + 1):
            qn *= q
            e4 += 240 * sig[n] * qn
            delta *= (1 - qn) ** 24
        return e4**3 / delta


def class_polynomial(disc: int = -840, prec: int = 300) -> list[int]:
    """Monic minimal polynomial of j((-b + sqrt(disc))/(2a)) over the reduced forms.

    Returns the h+1 integer coefficients, highest degree first.  Raises when
    the rounding residual exceeds 1e-10 (precision too low for this disc).
    """
    from . import qforms

    forms = qforms.reduced_forms(disc)
    with mp.workdps(prec + _GUARD):
        root = mp.sqrt(-disc)
        jvals = []
        for F in forms:
            tau = (-F.b + 1j * root) / (2 * F.a)
            jvals.append(j_invariant(tau, prec))
        coeffs = [mp.mpc(1)]
        for jv in jvals:
            nxt = [mp.mpc(0)] * (len(coeffs) + 1)
            for i, ci in enumerate(coeffs):
                nxt[i] += ci
                nxt[i + 1] -= ci * jv
            coeffs = nxt
        out = []
        worst = mp.mpf(0)
        for ci in coeffs:
            r = mp.re(ci)
            n = mp.nint(r)
            worst = max(worst, abs(r - n), abs(mp.im(ci)))
            out.append(int(n))
        if worst > mp.mpf("1e-10"):
            raise ArithmeticError(
                f"class polynomial rounding residual {mp.nstr(worst, 5)}; increase precision"
            )
        return out


# -- Dirichlet L-values at s = 1 (finite closed forms) ----------------------


def dirichlet_l_one(delta: int, prec: int = 50):
    """L(1, chi_delta) for a fundamental discriminant, by finite character sums.

    delta < 0:  pi |delta|^(-3/2) * sum_a chi(a) (|delta| - 2a)/2
    delta > 0:  -(1/sqrt(delta)) * sum_a chi(a) ln sin(pi a / delta)
    """
    if not arith.is_fundamental_discriminant(delta) or delta == 1:
        raise ValueError(f"need a fundamental discriminant != 1, got {delta}")
    with mp.workdps(prec + _GUARD):
        if delta < 0:
            q = -delta
            S = sum(arith.kronecker(delta, a) * (q - 2 * a) for a in range(1, q))
            return mp.pi * S / (2 * mp.power(q, mp.mpf(3) / 2))
        total = mp.mpf(0)
        for a in range(1, delta):
            chi = arith.kronecker(delta, a)
            if chi:
                total += chi * mp.log(mp.sin(mp.pi * a / delta))
        return -total / mp.sqrt(delta)


# -- Epstein zeta: analytic continuation and the constant term at s = 1 -----


def _lattice_points(A: int, B: int, C: int, bound) -> list[tuple[int, int]]:
    """Nonzero (x, y) with Q(x, y) = Ax^2 + 2Bxy + Cy^2 <= bound."""
    m = A * C - B * B
    pts = []
    ymax = int(mp.sqrt(bound * A / m)) + 1
    for y in range(-ymax, ymax + 1):
        # solve A x^2 + 2B x y + (C y^2 - bound) <= 0
        disc = (B * B - A * C) * y * y + A * bound
        if disc < 0:
            continue
        half = mp.sqrt(disc)
        lo = int(mp.ceil((-B * y - half) / A))
        hi = int(mp.floor((-B * y + half) / A))
        for x in range(lo, hi + 1):
            if x == 0 and y == 0:
                continue
            pts.append((x, y))
    return pts


def epstein_zeta(A: int, B: int, C: int, s, prec: int = 30):
    """Analytic continuation of sum' Q(x,y)^(-s) for the Gauss form (A, B, C).

    Uses the symmetric incomplete-gamma representation split at the self-dual
    point c = pi/sqrt(m); valid for real s != 1 (and s != 0).
    """
    m = A * C - B * B
    if m <= 0 or A <= 0:
        raise ValueError("form must be positive definite")
    with mp.workdps(prec + _GUARD):
        s = _to_mpf(s)
        if s == 1:
            raise ValueError("epstein_zeta has a pole at s = 1; use epstein_constant_term")
        c = mp.pi / mp.sqrt(m)
        cutoff = (mp.mp.prec + 16) * mp.log(2) / c
        total = c**s * (1 / (s - 1) - 1 / s)
        for x, y in _lattice_points(A, B, C, cutoff):
            qv = A * x * x + 2 * B * x * y + C * y * y
            total += mp.gammainc(s, a=c * qv) * mp.power(qv, -s)
        dual = c ** (2 * s - 1)
        for x, y in _lattice_points(C, -B, A, cutoff):
            qv = C * x * x - 2 * B * x * y + A * y * y
            total += dual * mp.gammainc(1 - s, a=c * qv) * mp.power(qv, s - 1)
        return total / mp.gamma(s)


def epstein_constant_term(A: int, B: int, C: int, prec: int = 30):
    """Constant term of sum' Q(x,y)^(-s) at s = 1 (pole pi/(sqrt(m)(s-1)) removed)."""
    m = A * C - B * B
    if m <= 0 or A <= 0:
        raise ValueError("form must be positive definite")
    with mp.workdps(prec + _GUARD):
        c = mp.pi / mp.sqrt(m)
        cutoff = (mp.mp.prec + 16) * mp.log(2) / c
        total = c * (mp.euler + mp.log(c) - 1)
        for x, y in _lattice_points(A, B, C, cutoff):
            qv = A * x * x + 2 * B * x * y + C * y * y
            total += mp.exp(-c * qv) / qv
        for x, y in _lattice_points(C, -B, A, cutoff):
            qv = C * x * x - 2 * B * x * y + A * y * y
            total += c * mp.e1(c * qv)
        return total


def grenzformel_rhs(A: int, B: int, C: int, prec: int = 30):
    """Kronecker's closed form for the Epstein constant term at s = 1."""
    m = A * C - B * B
    with mp.workdps(prec + _GUARD):
        rm = mp.sqrt(m)
        w1 = (B + 1j * rm) / A
        w2 = (-B + 1j * rm) / A
        prod = eta(w1, prec + _GUARD) * eta(w2, prec + _GUARD)
        return (
            2 * mp.pi * mp.euler / rm
            + mp.pi / rm * mp.log(mp.mpf(A) / (4 * m))
            - 2 * mp.pi / rm * mp.log(mp.re(prod))
        )


def verify_grenzformel(A: int, B: int, C: int, prec: int = 30):
    """Residual between the continued Epstein constant term and the closed form."""
    with mp.workdps(prec + _GUARD):
        return epstein_constant_term(A, B, C, prec) - grenzformel_rhs(A, B, C, prec)


def verify_formula_g(A: int, C: int, prec: int = 30):
    """Residual of lim [S_(A,0,2C) - S_(2A,0,C)] = (4 pi / sqrt(m)) ln g_(m/A^2), m = 2AC."""
    m = 2 * A * C
    with mp.workdps(prec + _GUARD):
        lhs = epstein_constant_term(A, 0, 2 * C, prec) - epstein_constant_term(
            2 * A, 0, C, prec
        )
        g = gn_numeric(Fraction(m, A * A), prec)
        rhs = 4 * mp.pi / mp.sqrt(m) * mp.log(g)
        return lhs - rhs
