"""Dense integer polynomials with exact arithmetic.

Coefficients are stored in ascending order, ``coeffs[i]`` multiplying
``x**i``.  Everything here is exact: resultants use fraction-free Gaussian
elimination, Sturm sequences use positive pseudo-remainders, and arithmetic
modulo a prime works on plain lists of residues.

Text input accepts two forms::

    1,-1,0,0,1          ascending coefficients c0,c1,...,cn
    x^4 - x + 1         sparse form: terms [sign][coef][*]x[^k] or [sign]coef

Coefficients may be rationals (``1/2``, ``-3/4``) in either form; the result
is scaled by the lcm of denominators so it has integer coefficients.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence


class PolynomialError(ValueError):
    pass


class ParseError(PolynomialError):
    pass


def _trim(c: Sequence[int]) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntegerPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(self.coeffs)
        if any(not isinstance(a, int) or isinstance(a, bool) for a in c):
            try:
                c = tuple(_as_int(a) for a in c)
            except (TypeError, ValueError) as exc:
                raise PolynomialError(f"non-integer coefficient in {self.coeffs!r}") from exc
        object.__setattr__(self, "coeffs", _trim(c))

    # --- constructors ----------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> IntegerPolynomial:
        return parse_polynomial(text)

    @classmethod
    def from_rationals(cls, coeffs: Iterable) -> IntegerPolynomial:
        """Clear denominators of ascending rational coefficients."""
        fr = [Fraction(a) for a in coeffs]
        den = reduce(math.lcm, (a.denominator for a in fr), 1)
        return cls(tuple(int(a * den) for a in fr))

    @classmethod
    def x(cls) -> IntegerPolynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, a: int) -> IntegerPolynomial:
        return cls((a,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntegerPolynomial:
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    # --- basic properties --------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive_part(self) -> IntegerPolynomial:
        """Divide by the content, keeping a positive leading coefficient."""
        g = self.content()
        if g == 0:
            return self
        if self.lc < 0:
            g = -g
        return IntegerPolynomial(tuple(a // g for a in self.coeffs))

    def descending(self) -> list[int]:
        return list(reversed(self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # --- arithmetic --------------------------------------------------------

    def __add__(self, other) -> IntegerPolynomial:
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntegerPolynomial(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> IntegerPolynomial:
        return IntegerPolynomial(tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> IntegerPolynomial:
        return self + (-_lift(other))

    def __rsub__(self, other) -> IntegerPolynomial:
        return _lift(other) - self

    def __mul__(self, other) -> IntegerPolynomial:
        if isinstance(other, int):
            return IntegerPolynomial(tuple(a * other for a in self.coeffs))
        other = _lift(other)
        if self.is_zero or other.is_zero:
            return IntegerPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntegerPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntegerPolynomial:
        out = IntegerPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0 * x
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> IntegerPolynomial:
        return IntegerPolynomial(tuple(i * a for i, a in enumerate(self.coeffs) if i))

    def compose(self, g: IntegerPolynomial) -> IntegerPolynomial:
        out = IntegerPolynomial(())
        for a in reversed(self.coeffs):
            out = out * g + a
        return out

    def shift(self, k: int) -> IntegerPolynomial:
        """``f(x + k)``."""
        return self.compose(IntegerPolynomial((k, 1)))

    def scale_roots(self, a: int) -> IntegerPolynomial:
        """Polynomial whose roots are ``a`` times the roots of ``self``: ``a^n f(x/a)``."""
        n = self.degree
        return IntegerPolynomial(tuple(c * a ** (n - i) for i, c in enumerate(self.coeffs)))

    def monic_normalization(self) -> tuple[IntegerPolynomial, int]:
        """``(g, a)`` with ``g = a^(n-1) f(x/a)`` monic, ``a = lc(f)``; roots of ``g`` are ``a`` times those of ``f``."""
        a = self.lc
        if a == 1:
            return self, 1
        n = self.degree
        g = IntegerPolynomial(tuple(c * a ** (n - 1 - i) if i < n else 1 for i, c in enumerate(self.coeffs)))
        return g, a

    def reverse(self) -> IntegerPolynomial:
        return IntegerPolynomial(tuple(reversed(self.coeffs)))

    def divmod_int(self, other: IntegerPolynomial) -> tuple[IntegerPolynomial, IntegerPolynomial]:
        """Division over the integers; raises when a quotient coefficient is not integral."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db, lb = other.degree, other.lc
        q = [0] * max(len(r) - db, 0)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c == 0:
                continue
            if c % lb:
                raise PolynomialError("division is not exact over the integers")
            t = c // lb
            q[i - db] = t
            for j, b in enumerate(other.coeffs):
                r[i - db + j] -= t * b
        return IntegerPolynomial(tuple(q)), IntegerPolynomial(tuple(r))

    def exact_div(self, other: IntegerPolynomial) -> IntegerPolynomial:
        try:
            q, r = self.divmod_int(other)
        except PolynomialError as exc:
            raise PolynomialError(f"{other} does not divide {self}") from exc
        if not r.is_zero:
            raise PolynomialError(f"{other} does not divide {self}")
        return q

    def divides(self, other: IntegerPolynomial) -> bool:
        """Whether ``self`` divides ``other`` in ``Z[x]``."""
        try:
            other.exact_div(self)
        except PolynomialError:
            return False
        return True

    def pseudo_remainder(self, other: IntegerPolynomial) -> IntegerPolynomial:
        """Remainder of ``|lc(other)|^(d+1) * self`` by ``other``; a positive multiple of the true remainder."""
        d = self.degree - other.degree
        if d < 0:
            return self
        m = abs(other.lc) ** (d + 1)
        return (self * m).divmod_int(other)[1]

    # --- printing ------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"IntegerPolynomial({str(self)!r})"

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def _as_int(a) -> int:
    if isinstance(a, Fraction):
        if a.denominator != 1:
            raise ValueError(a)
        return int(a.numerator)
    if isinstance(a, float):
        if not a.is_integer():
            raise ValueError(a)
        return int(a)
    return int(a)


def _lift(p) -> IntegerPolynomial:
    if isinstance(p, IntegerPolynomial):
        return p
    if isinstance(p, int):
        return IntegerPolynomial((p,))
    raise TypeError(f"cannot combine polynomial with {type(p).__name__}")


# --------------------------------------------------------------------------
# parsing

_NUM = r"\d+(?:/\d+)?"
_TERM = re.compile(rf"([+-])?\s*(?:({_NUM})\s*\*?\s*)?(x(?:\s*\^\s*(\d+))?)?\s*")
_CSV = re.compile(rf"^\s*[+-]?{_NUM}\s*(,\s*[+-]?{_NUM}\s*)*$")


def parse_polynomial(text: str) -> IntegerPolynomial:
    """Parse ascending CSV coefficients or the sparse ``x^k`` form; see module docstring."""
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty polynomial text")
    s = text.strip()
    if _CSV.match(s):
        return IntegerPolynomial.from_rationals(Fraction(t.strip()) for t in s.split(","))
    if re.search(r"[\dx]\s+[\dx]", s):
        raise ParseError(f"missing operator in {text!r}")
    s = s.replace("**", "^").replace(" ", "")
    if "x" not in s and not re.fullmatch(rf"[+-]?{_NUM}", s):
        raise ParseError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected {s[pos:]!r} in {text!r}")
        sign, num, xpart, exp = m.groups()
        if not num and not xpart:
            raise ParseError(f"dangling sign in {text!r}")
        if not first and not sign:
            raise ParseError(f"missing operator before {s[pos:]!r}")
        c = Fraction(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        k = (int(exp) if exp else 1) if xpart else 0
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
        first = False
    n = max(coeffs)
    return IntegerPolynomial.from_rationals(coeffs.get(i, 0) for i in range(n + 1))


# --------------------------------------------------------------------------
# determinants, resultants, discriminants


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def sylvester_matrix(f: IntegerPolynomial, g: IntegerPolynomial) -> list[list[int]]:
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fd, gd = f.descending(), g.descending()
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return rows


def resultant(f: IntegerPolynomial, g: IntegerPolynomial) -> int:
    """``Res(f, g) = lc(f)^deg g * prod g(roots of f)``."""
    if f.is_zero or g.is_zero:
        return 0
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree
    return bareiss_determinant(sylvester_matrix(f, g))


def discriminant(f: IntegerPolynomial) -> int:
    """``(-1)^(n(n-1)/2) Res(f, f') / lc(f)``; zero exactly when ``f`` has a repeated root."""
    if f.is_zero:
        raise PolynomialError("discriminant of the zero polynomial")
    n = f.degree
    if n < 1:
        raise PolynomialError("discriminant needs degree at least 1")
    if n == 1:
        return 1
    res = resultant(f, f.derivative())
    q, r = divmod(res, f.lc)
    if r:
        raise AssertionError("resultant not divisible by leading coefficient")
    return -q if (n * (n - 1) // 2) % 2 else q


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


# --------------------------------------------------------------------------
# Sturm sequences


def sturm_sequence(f: IntegerPolynomial) -> list[IntegerPolynomial]:
    """Sturm chain with every member rescaled by a positive constant."""
    if f.degree < 1:
        raise PolynomialError("Sturm sequence needs degree at least 1")
    seq = [_positive_primitive(f), _positive_primitive(f.derivative())]
    while seq[-1].degree > 0:
        r = seq[-2].pseudo_remainder(seq[-1])
        if r.is_zero:
            break
        seq.append(-_positive_primitive(r))
    return seq


def _positive_primitive(p: IntegerPolynomial) -> IntegerPolynomial:
    g = p.content()
    return IntegerPolynomial(tuple(a // g for a in p.coeffs)) if g > 1 else p


def _sign_changes(values: Iterable) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _signs_at_infinity(seq: list[IntegerPolynomial], positive: bool) -> list[int]:
    return [p.lc if positive or p.degree % 2 == 0 else -p.lc for p in seq]


def count_real_roots(f: IntegerPolynomial, lo=None, hi=None) -> int:
    """Distinct real roots in ``(lo, hi]``; ``None`` means the corresponding infinity."""
    seq = sturm_sequence(f)
    va = _sign_changes(_signs_at_infinity(seq, False) if lo is None else [p(Fraction(lo)) for p in seq])
    vb = _sign_changes(_signs_at_infinity(seq, True) if hi is None else [p(Fraction(hi)) for p in seq])
    return va - vb


def root_bound(f: IntegerPolynomial) -> Fraction:
    """Cauchy bound: every complex root has absolute value below this."""
    lc = abs(f.lc)
    return 1 + Fraction(max((abs(a) for a in f.coeffs[:-1]), default=0), lc)


# --------------------------------------------------------------------------
# exact interpolation and square roots


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> IntegerPolynomial:
    """Polynomial through integer points; must have integer coefficients."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # Newton form to monomial basis
    poly = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # poly = poly * (x - xs[k]) + coef[k]
        new = [Fraction(0)] * n
        for i in range(n - 1):
            new[i + 1] += poly[i]
            new[i] -= poly[i] * xs[k]
        new[0] += coef[k]
        poly = new
    if any(c.denominator != 1 for c in poly):
        raise PolynomialError("interpolated polynomial is not integral")
    return IntegerPolynomial(tuple(int(c) for c in poly))


def polynomial_sqrt(q: IntegerPolynomial) -> IntegerPolynomial:
    """Exact square root of a monic integer polynomial that is a perfect square."""
    if q.is_zero or q.degree % 2 or q.lc != 1:
        raise PolynomialError("not a monic polynomial of even degree")
    m = q.degree // 2
    s = [0] * (m + 1)
    s[m] = 1
    for k in range(1, m + 1):
        target = q.coeffs[2 * m - k]
        acc = sum(s[i] * s[2 * m - k - i] for i in range(m - k + 1, m))
        num = target - acc
        if num % 2:
            raise PolynomialError("polynomial is not a perfect square")
        s[m - k] = num // 2
    root = IntegerPolynomial(tuple(s))
    if root * root != q:
        raise PolynomialError("polynomial is not a perfect square")
    return root


# --------------------------------------------------------------------------
# arithmetic modulo a prime


def _mtrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mtrim([c % p for c in out])


def _msub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _mtrim([(x - y) % p for x, y in zip(a, b)])


def _mdivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(r) - db, 0)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] % p
        if c == 0:
            continue
        t = c * inv % p
        q[i - db] = t
        for j, y in enumerate(b):
            r[i - db + j] = (r[i - db + j] - t * y) % p
    return _mtrim(q), _mtrim([c % p for c in r[:db]])


def _mgcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _mdivmod(a, b, p)[1]
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _mpowmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _mdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _mdivmod(_mmul(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = _mdivmod(_mmul(base, base, p), mod, p)[1]
    return result


def reduce_mod(f: IntegerPolynomial, p: int) -> list[int]:
    return _mtrim([a % p for a in f.coeffs])


def factor_degrees_mod_p(f: IntegerPolynomial, p: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors of ``f`` mod ``p`` (distinct-degree factorization).

    ``f`` must stay squarefree of the same degree mod ``p``.
    """
    g = reduce_mod(f, p)
    if len(g) - 1 != f.degree:
        raise PolynomialError(f"leading coefficient vanishes mod {p}")
    inv = pow(g[-1], -1, p)
    g = [c * inv % p for c in g]
    degrees: list[int] = []
    x = [0, 1]
    h = x
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        h = _mpowmod(h, p, g, p)
        diff = _msub(h, x, p)
        common = _mgcd(g, diff, p) if diff else list(g)
        k = len(common) - 1
        if k > 0:
            degrees += [d] * (k // d)
            g = _mdivmod(g, common, p)[0]
            h = _mdivmod(h, g, p)[1] if len(g) > 1 else []
    if len(g) > 1:
        degrees.append(len(g) - 1)
    return tuple(sorted(degrees, reverse=True))


def primes(start: int = 2):
    """Unbounded prime generator (incremental sieve)."""
    composites: dict[int, list[int]] = {}
    n = 2
    while True:
        if n not in composites:
            if n >= start:
                yield n
            composites[n * n] = [n]
        else:
            for q in composites.pop(n):
                composites.setdefault(n + q, []).append(q)
        n += 1
