"""Exact arithmetic in the cyclotomic field Q(zeta_N).

All quantum-group computations for a parameter pair (p_plus, p_minus) run
inside a single field Q(zeta_N) with N = 24*p_plus*p_minus.  This order is
the least uniform choice that contains

* the deformation parameter q = zeta_N**6 (a primitive 4*p_plus*p_minus-th
  root of -1),
* sqrt(2) = zeta_8 + zeta_8**-1 with zeta_8 = zeta_N**(3*p_plus*p_minus),
* sqrt(p_plus*p_minus) through the quadratic Gauss sum in q,
* the modular phase exp(-i*pi*c/12) for the central charge c.

Elements are stored in canonical form: a sparse integer map over the power
basis {zeta^k : 0 <= k < phi(N)} reduced modulo the N-th cyclotomic
polynomial, together with a single positive denominator.  Two elements are
equal iff their canonical data agree, so hashing and exact zero tests are
cheap.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

__all__ = [
    "CycloContext",
    "Cyclo",
    "LaurentZ",
    "euler_phi",
    "cyclotomic_polynomial",
    "q_int_poly",
    "q_factorial_poly",
    "q_binomial_poly",
    "q_int",
    "q_factorial",
    "q_binomial",
    "sqrt2",
    "gauss_sqrt",
    "sqrt_half_pp",
]


def euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_divexact(a, b):
    # exact division of integer polynomials, quotient returned
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        assert c % lead == 0
        f = c // lead
        q[i - db] = f
        for j, bj in enumerate(b):
            a[i - db + j] -= f * bj
    assert all(c == 0 for c in a)
    return q


def cyclotomic_polynomial(n: int):
    """Coefficient list (ascending) of Phi_n over the integers."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    divisors = [d for d in range(1, n) if n % d == 0]
    den = [1]
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    cache = {}

    def phi_poly(m):
        if m == 1:
            return [-1, 1]
        if m in cache:
            return cache[m]
        nm = [-1] + [0] * (m - 1) + [1]
        dd = [1]
        for d in range(1, m):
            if m % d == 0:
                dd = _poly_mul(dd, phi_poly(d))
        res = _poly_divexact(nm, dd)
        cache[m] = res
        return res

    for d in divisors:
        den = _poly_mul(den, phi_poly(d))
    return _poly_divexact(num, den)


class CycloContext:
    """Fixed-order cyclotomic field with cached reduction data.

    The reduction table maps zeta^k for phi(N) <= k < N + phi(N) to its
    canonical sparse form; once built it is read-only, so a context can be
    shared freely across threads.  If the environment variable
    QPM_CACHE_DIR names a directory, the table is persisted there and
    reloaded on subsequent runs.
    """

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        self.phi = euler_phi(order)
        poly = cyclotomic_polynomial(order)
        assert len(poly) == self.phi + 1 and poly[-1] == 1
        self._phi_poly = poly
        rows = self._load_cached_rows()
        if rows is None:
            # rows[k - phi] = canonical sparse dict of zeta^k, for k in
            # [phi, order + phi): enough headroom for products of canonical
            # elements shifted by any zeta-power.
            rows = []
            cur = {i: -c for i, c in enumerate(poly[:-1]) if c}  # zeta^phi
            rows.append(dict(cur))
            for _ in range(self.order - 1):
                nxt = {}
                for e, c in cur.items():
                    e1 = e + 1
                    if e1 < self.phi:
                        nxt[e1] = nxt.get(e1, 0) + c
                    else:
                        for e2, c2 in rows[e1 - self.phi].items():
                            nxt[e2] = nxt.get(e2, 0) + c * c2
                cur = {e: c for e, c in nxt.items() if c}
                rows.append(dict(cur))
            self._store_cached_rows(rows)
        self._rows = rows
        self.zero = Cyclo(self, {}, 1)
        self.one = Cyclo(self, {0: 1}, 1)
        self._root_cache = {}

    def _cache_path(self):
        import os
        cache_dir = os.environ.get("QPM_CACHE_DIR")
        if not cache_dir:
            return None
        return os.path.join(cache_dir, f"cyclo_reduction_{self.order}.json")

    def _load_cached_rows(self):
        path = self._cache_path()
        if not path:
            return None
        import json
        import os
        if not os.path.exists(path):
            return None
        try:
            with open(path) as fh:
                doc = json.load(fh)
            if doc.get("order") != self.order or len(doc["rows"]) != self.order:
                return None
            return [{int(e): int(c) for e, c in row.items()}
                    for row in doc["rows"]]
        except (OSError, ValueError, KeyError):
            return None

    def _store_cached_rows(self, rows):
        path = self._cache_path()
        if not path:
            return
        import json
        import os
        try:
            os.makedirs(os.path.dirname(path), exist_ok=True)
            with open(path, "w") as fh:
                json.dump({"order": self.order,
                           "rows": [{str(e): c for e, c in row.items()}
                                    for row in rows]}, fh)
        except OSError:
            pass

    def reduce(self, raw: dict, den: int) -> "Cyclo":
        """Canonicalize a sparse {exponent: integer} map (exponents may be
        any integers) with the given denominator."""
        acc = {}
        for e, c in raw.items():
            if not c:
                continue
            e %= self.order
            if e < self.phi:
                acc[e] = acc.get(e, 0) + c
            else:
                for e2, c2 in self._rows[e - self.phi].items():
                    acc[e2] = acc.get(e2, 0) + c * c2
        acc = {e: c for e, c in acc.items() if c}
        return self._normalized(acc, den)

    def _normalized(self, num: dict, den: int) -> "Cyclo":
        if any(c == 0 for c in num.values()):
            num = {e: c for e, c in num.items() if c}
        if not num:
            return Cyclo(self, {}, 1)
        if den < 0:
            den = -den
            num = {e: -c for e, c in num.items()}
        g = den
        for c in num.values():
            g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            num = {e: c // g for e, c in num.items()}
        return Cyclo(self, num, den)

    def root_of_unity(self, k: int) -> "Cyclo":
        """zeta_N^k in canonical form (k arbitrary, reduced mod N)."""
        k %= self.order
        hit = self._root_cache.get(k)
        if hit is None:
            hit = self.reduce({k: 1}, 1)
            self._root_cache[k] = hit
        return hit

    def integer(self, n) -> "Cyclo":
        if isinstance(n, Fraction):
            return self._normalized({0: n.numerator} if n else {}, n.denominator)
        return Cyclo(self, {0: n} if n else {}, 1)

    def from_pairs(self, pairs) -> "Cyclo":
        """Element from a dense list of (num, den) pairs over the power basis."""
        den = 1
        for _, d in pairs:
            den = den * d // math.gcd(den, d)
        num = {}
        for e, (n, d) in enumerate(pairs):
            if n:
                num[e] = n * (den // d)
        return self._normalized(num, den)


class Cyclo:
    """Immutable element of Q(zeta_N) in canonical form."""

    __slots__ = ("ctx", "num", "den", "_hash")

    def __init__(self, ctx: CycloContext, num: dict, den: int):
        self.ctx = ctx
        self.num = num
        self.den = den
        self._hash = None

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Cyclo):
            other = self.ctx.integer(other)
        a, b = self, other
        if a.den == b.den:
            num = dict(a.num)
            for e, c in b.num.items():
                v = num.get(e, 0) + c
                if v:
                    num[e] = v
                else:
                    num.pop(e, None)
            return self.ctx._normalized(num, a.den)
        g = math.gcd(a.den, b.den)
        la = b.den // g
        lb = a.den // g
        num = {e: c * la for e, c in a.num.items()}
        for e, c in b.num.items():
            v = num.get(e, 0) + c * lb
            if v:
                num[e] = v
            else:
                num.pop(e, None)
        return self.ctx._normalized(num, a.den * la)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.ctx, {e: -c for e, c in self.num.items()}, self.den)

    def __sub__(self, other):
        if not isinstance(other, Cyclo):
            other = self.ctx.integer(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.ctx.integer(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Cyclo):
            if isinstance(other, Fraction):
                return self.ctx._normalized(
                    {e: c * other.numerator for e, c in self.num.items()},
                    self.den * other.denominator)
            return self.ctx._normalized(
                {e: c * other for e, c in self.num.items()}, self.den)
        raw = {}
        for e1, c1 in self.num.items():
            for e2, c2 in other.num.items():
                e = e1 + e2
                raw[e] = raw.get(e, 0) + c1 * c2
        return self.ctx.reduce(raw, self.den * other.den)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Cyclo":
        """Multiplication by zeta^k (fast path)."""
        return self.ctx.reduce({e + k: c for e, c in self.num.items()}, self.den)

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = self.ctx.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- field structure -------------------------------------------------

    def inv(self) -> "Cyclo":
        """Multiplicative inverse via the extended Euclidean algorithm in
        Q[x] against Phi_N."""
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        phi = self.ctx.phi
        # dense Fraction polys:  r0 = Phi_N,  r1 = self
        r0 = [Fraction(c) for c in self.ctx._phi_poly]
        r1 = [Fraction(0)] * phi
        for e, c in self.num.items():
            r1[e] = Fraction(c, self.den)
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def deg(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        d1 = deg(r1)
        while d1 > 0:
            d0 = deg(r0)
            q = [Fraction(0)] * (d0 - d1 + 1)
            r0 = list(r0)
            while d0 >= d1:
                f = r0[d0] / r1[d1]
                q[d0 - d1] = f
                for j in range(d1 + 1):
                    r0[d0 - d1 + j] -= f * r1[j]
                d0 = deg(r0)
            # s0 - q*s1
            qs1 = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        qs1[i + j] += qi * sj
            ns0 = [Fraction(0)] * max(len(s0), len(qs1))
            for i, c in enumerate(s0):
                ns0[i] += c
            for i, c in enumerate(qs1):
                ns0[i] -= c
            r0, r1 = r1, r0
            s0, s1 = s1, ns0
            d1 = deg(r1)
        if d1 < 0:
            raise ZeroDivisionError("element is a zero divisor (not coprime to Phi_N)")
        c = r1[0]  # nonzero constant
        den = 1
        for v in s1:
            den = den * (v / c).denominator // math.gcd(den, (v / c).denominator)
        num = {}
        for e, v in enumerate(s1):
            w = v / c
            if w:
                num[e] = w.numerator * (den // w.denominator)
        return self.ctx._normalized(num, den)

    def __truediv__(self, other):
        if not isinstance(other, Cyclo):
            if isinstance(other, Fraction):
                return self * Fraction(other.denominator, other.numerator)
            return self * Fraction(1, other)
        return self * other.inv()

    # -- involutions and predicates ---------------------------------------

    def conj(self) -> "Cyclo":
        """Complex conjugation, i.e. the Galois map zeta -> zeta^(N-1)."""
        return self.ctx.reduce({-e: c for e, c in self.num.items()}, self.den)

    def is_zero(self) -> bool:
        return not self.num

    def is_rational(self) -> bool:
        return all(e == 0 for e in self.num)

    def rational_value(self) -> Fraction:
        if not self.num:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.num[0], self.den)

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self == self.ctx.integer(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.den, tuple(sorted(self.num.items()))))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        if not self.num:
            return "Cyclo(0)"
        parts = []
        for e in sorted(self.num):
            c = self.num[e]
            parts.append(f"{c}*z^{e}" if e else f"{c}")
        s = " + ".join(parts).replace("+ -", "- ")
        if self.den != 1:
            return f"Cyclo(({s})/{self.den})"
        return f"Cyclo({s})"

    # -- numerics ---------------------------------------------------------

    def embed(self, precision: int = 53):
        """Numerical value under zeta_N -> exp(2*pi*i/N) as an (re, im) pair.

        Computed with `precision` working bits; for precision <= 53 the pair
        is returned as Python floats, otherwise as mpmath floats.
        """
        if precision < 53:
            raise ValueError("precision must be at least 53 bits")
        with mpmath.workprec(precision + 10):
            two_pi = 2 * mpmath.pi
            re = mpmath.mpf(0)
            im = mpmath.mpf(0)
            for e, c in self.num.items():
                ang = two_pi * e / self.order
                re += c * mpmath.cos(ang)
                im += c * mpmath.sin(ang)
            re /= self.den
            im /= self.den
            if precision <= 53:
                return (float(re), float(im))
            return (+re, +im)

    @property
    def order(self):
        return self.ctx.order

    # -- serialization ------------------------------------------------------

    def to_pairs(self):
        """Dense list of reduced (num, den) pairs over the power basis."""
        out = []
        for e in range(self.ctx.phi):
            c = self.num.get(e, 0)
            if c:
                g = math.gcd(c, self.den)
                out.append([c // g, self.den // g])
            else:
                out.append([0, 1])
        return out

    def to_json(self, precision: int | None = None):
        doc = {"order": self.order, "coeffs": self.to_pairs()}
        if precision is not None:
            re, im = self.embed(max(precision, 53))
            doc["float"] = [float(re), float(im)]
        return doc

    @staticmethod
    def from_json(ctx: CycloContext, doc) -> "Cyclo":
        if doc["order"] != ctx.order:
            raise ValueError("field order mismatch")
        return ctx.from_pairs([tuple(p) for p in doc["coeffs"]])


# ----------------------------------------------------------------------
# Laurent polynomials over Z, used to evaluate q-binomial coefficients at
# roots of unity without ever dividing specialized values.
# ----------------------------------------------------------------------

class LaurentZ:
    """Sparse Laurent polynomial in Z[x, x^-1]."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        self.c = {e: v for e, v in (c or {}).items() if v}

    @staticmethod
    def one():
        return LaurentZ({0: 1})

    def __add__(self, other):
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        return LaurentZ(c)

    def __sub__(self, other):
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, 0) - v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        return LaurentZ(c)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentZ({e: v * other for e, v in self.c.items()})
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentZ(c)

    def divexact(self, other: "LaurentZ") -> "LaurentZ":
        """Exact division; raises if the quotient is not in Z[x, x^-1]."""
        if not other.c:
            raise ZeroDivisionError
        if not self.c:
            return LaurentZ()
        lo_s, hi_s = min(self.c), max(self.c)
        lo_o, hi_o = min(other.c), max(other.c)
        # shift both to ordinary polynomials
        a = [0] * (hi_s - lo_s + 1)
        for e, v in self.c.items():
            a[e - lo_s] = v
        b = [0] * (hi_o - lo_o + 1)
        for e, v in other.c.items():
            b[e - lo_o] = v
        db = len(b) - 1
        lead = b[-1]
        if len(a) - 1 < db:
            raise ValueError("not divisible")
        q = [0] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c == 0:
                continue
            if c % lead:
                raise ValueError("not divisible")
            f = c // lead
            q[i - db] = f
            for j, bj in enumerate(b):
                a[i - db + j] -= f * bj
        if any(a):
            raise ValueError("not divisible")
        shift = lo_s - lo_o
        return LaurentZ({e + shift: v for e, v in enumerate(q) if v})

    def eval_cyclo(self, q: Cyclo) -> Cyclo:
        """Specialize x -> q for an invertible q."""
        ctx = q.ctx
        out = ctx.zero
        if not self.c:
            return out
        qinv = q.inv() if min(self.c) < 0 else None
        pow_cache = {0: ctx.one}

        def qpow(e):
            if e in pow_cache:
                return pow_cache[e]
            v = q ** e if e > 0 else qinv ** (-e)
            pow_cache[e] = v
            return v

        for e, v in self.c.items():
            out = out + qpow(e) * v
        return out

    def __eq__(self, other):
        return isinstance(other, LaurentZ) and self.c == other.c

    def __repr__(self):
        return f"LaurentZ({self.c})"


def q_int_poly(n: int) -> LaurentZ:
    """[n]_x = (x^n - x^-n)/(x - x^-1) as a Laurent polynomial."""
    if n < 0:
        return LaurentZ({}) - q_int_poly(-n)
    return LaurentZ({n - 1 - 2 * k: 1 for k in range(n)})


def q_factorial_poly(n: int) -> LaurentZ:
    out = LaurentZ.one()
    for k in range(1, n + 1):
        out = out * q_int_poly(k)
    return out


def q_binomial_poly(m: int, n: int) -> LaurentZ:
    """Gaussian binomial [m choose n]_x; cancellation is symbolic, so the
    result specializes safely at any root of unity."""
    if n < 0 or n > m:
        return LaurentZ()
    num = q_factorial_poly(m)
    den = q_factorial_poly(n) * q_factorial_poly(m - n)
    return num.divexact(den)


def q_int(n: int, q: Cyclo) -> Cyclo:
    return q_int_poly(n).eval_cyclo(q)


def q_factorial(n: int, q: Cyclo) -> Cyclo:
    return q_factorial_poly(n).eval_cyclo(q)


def q_binomial(m: int, n: int, q: Cyclo) -> Cyclo:
    return q_binomial_poly(m, n).eval_cyclo(q)


# ----------------------------------------------------------------------
# Square roots needed for the canonical normalizations.  The positive real
# branch is pinned by explicit root-of-unity expressions, never by a
# floating-point sign choice.
# ----------------------------------------------------------------------

def sqrt2(ctx: CycloContext) -> Cyclo:
    """sqrt(2) = zeta_8 + zeta_8^-1 (requires 8 | N)."""
    if ctx.order % 8:
        raise ValueError("field order must be divisible by 8")
    z8 = ctx.order // 8
    return ctx.root_of_unity(z8) + ctx.root_of_unity(-z8)


def gauss_sqrt(ctx: CycloContext, pp: int) -> Cyclo:
    """sqrt(pp) for pp = p_plus*p_minus with N = 24*pp, from the quadratic
    Gauss sum  sum_{j=0}^{2*pp-1} q^(j^2) = (1+i) sqrt(pp),  q = zeta_N^6."""
    if ctx.order != 24 * pp:
        raise ValueError("field order must equal 24*pp")
    s = ctx.zero
    for j in range(2 * pp):
        s = s + ctx.root_of_unity(6 * j * j)
    i_unit = ctx.root_of_unity(ctx.order // 4)
    return s * (ctx.one + i_unit).inv()


def sqrt_half_pp(ctx: CycloContext, pp: int) -> Cyclo:
    """sqrt(pp/2) = (1/2) * sqrt(2) * sqrt(pp), exactly."""
    return sqrt2(ctx) * gauss_sqrt(ctx, pp) * Fraction(1, 2)
