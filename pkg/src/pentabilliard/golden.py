"""Exact arithmetic in Q(phi) and in its quadratic extension by sin(2*pi/5).

GoldenNum represents (a + b*phi)/d with integer a, b, d, where phi is the
golden ratio (phi^2 = phi + 1).  PentaReal represents
(w + x*phi + y*s + z*phi*s)/d where s = sin(2*pi/5) satisfies
s^2 = (2 + phi)/4.  Both are immutable, stored in lowest terms, and support
exact sign determination, so geometric predicates built on them are never
wrong.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

PHI_FLOAT = (1 + 5**0.5) / 2
SIN72_FLOAT = ((2 + PHI_FLOAT) / 4) ** 0.5

_SQRT5_FLOAT = 5**0.5
# Above this magnitude the float fast path for signs is not trusted.
_FAST_SIGN_LIMIT = 1 << 50


def _sign_quad(p: int, q: int) -> int:
    """Exact sign of p + q*sqrt(5) using integer arithmetic only."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return (q > 0) - (q < 0)
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    d = p * p - 5 * q * q  # sign of |p| - |q*sqrt5|
    if p > 0:  # q < 0
        return (d > 0) - (d < 0)
    return (d < 0) - (d > 0)  # p < 0 < q


def _sign_golden_ints(a: int, b: int) -> int:
    """Sign of a + b*phi for integers a, b."""
    # a + b*(1+sqrt5)/2 = ((2a+b) + b*sqrt5)/2
    p = 2 * a + b
    if abs(p) < _FAST_SIGN_LIMIT and abs(b) < _FAST_SIGN_LIMIT:
        est = p + b * _SQRT5_FLOAT
        if abs(est) > 1e-9 * (abs(p) + 3 * abs(b) + 1):
            return 1 if est > 0 else -1
    return _sign_quad(p, b)


class GoldenNum:
    """Element (a + b*phi)/den of Q(phi), normalized so den > 0 and gcd = 1."""

    __slots__ = ("a_num", "b_num", "den")

    def __init__(self, a_num: int, b_num: int, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator in GoldenNum")
        if den < 0:
            a_num, b_num, den = -a_num, -b_num, -den
        g = gcd(gcd(abs(a_num), abs(b_num)), den)
        if g > 1:
            a_num //= g
            b_num //= g
            den //= g
        object.__setattr__(self, "a_num", a_num)
        object.__setattr__(self, "b_num", b_num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("GoldenNum is immutable")

    @classmethod
    def from_fractions(cls, a: Fraction, b: Fraction) -> "GoldenNum":
        a = Fraction(a)
        b = Fraction(b)
        den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        return cls(a.numerator * (den // a.denominator),
                   b.numerator * (den // b.denominator), den)

    @property
    def a(self) -> Fraction:
        """Rational part."""
        return Fraction(self.a_num, self.den)

    @property
    def b(self) -> Fraction:
        """Coefficient of phi."""
        return Fraction(self.b_num, self.den)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenNum(self.a_num * other.den + other.a_num * self.den,
                         self.b_num * other.den + other.b_num * self.den,
                         self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return GoldenNum(-self.a_num, -self.b_num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a1, b1, a2, b2 = self.a_num, self.b_num, other.a_num, other.b_num
        # (a1 + b1 phi)(a2 + b2 phi), phi^2 = phi + 1
        bb = b1 * b2
        return GoldenNum(a1 * a2 + bb, a1 * b2 + b1 * a2 + bb,
                         self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "GoldenNum":
        """Multiplicative inverse; raises ZeroDivisionError at 0."""
        a, b = self.a_num, self.b_num
        n = a * a + a * b - b * b  # field norm times den^2 sign structure
        if n == 0:
            raise ZeroDivisionError("inverse of zero GoldenNum")
        # 1/((a + b phi)/d) = d*(a + b - b phi)/n
        return GoldenNum(self.den * (a + b), -self.den * b, n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def conjugate(self) -> "GoldenNum":
        """Galois conjugate phi -> 1 - phi."""
        return GoldenNum(self.a_num + self.b_num, -self.b_num, self.den)

    def sign(self) -> int:
        return _sign_golden_ints(self.a_num, self.b_num)

    def is_zero(self) -> bool:
        return self.a_num == 0 and self.b_num == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.a_num == other.a_num and self.b_num == other.b_num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.a_num, self.b_num, self.den))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return (self.a_num + self.b_num * PHI_FLOAT) / self.den

    def __repr__(self):
        return f"GoldenNum({self})"

    def __str__(self):
        """Canonical text form 'a+b*phi' with reduced rationals."""
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        bs = f"{b}*phi"
        if a == 0:
            return bs
        return f"{a}+{bs}" if b > 0 else f"{a}-{-b}*phi"

    @classmethod
    def parse(cls, text: str) -> "GoldenNum":
        """Inverse of str(); accepts 'a', 'b*phi', 'a+b*phi', 'a-b*phi'."""
        t = text.strip().replace(" ", "")
        if "phi" not in t:
            return cls.from_fractions(Fraction(t), Fraction(0))
        if "*phi" not in t:
            t = t.replace("phi", "1*phi")
        head, _, _ = t.partition("*phi")
        # split off the a part: find last +/- not at position 0 and not in a
        # fraction exponent (only digits, '/', '-' appear)
        for i in range(len(head) - 1, 0, -1):
            if head[i] in "+-":
                a_part, b_part = head[:i], head[i:]
                break
        else:
            a_part, b_part = "0", head
        if b_part == "+" or b_part == "-":
            b_part += "1"
        return cls.from_fractions(Fraction(a_part), Fraction(b_part))


def _coerce(x):
    if isinstance(x, GoldenNum):
        return x
    if isinstance(x, int):
        return GoldenNum(x, 0)
    if isinstance(x, Fraction):
        return GoldenNum(x.numerator, 0, x.denominator)
    return NotImplemented


ZERO = GoldenNum(0, 0)
ONE = GoldenNum(1, 0)
PHI = GoldenNum(0, 1)
HALF_PHI = GoldenNum(0, 1, 2)          # phi/2
ONE_MINUS_HALF_PHI = GoldenNum(2, -1, 2)  # 1 - phi/2
HALF_PHI_MINUS_ONE = GoldenNum(-2, 1, 2)  # phi/2 - 1


class PentaReal:
    """Element (w + x*phi + y*s + z*phi*s)/den with s = sin(2*pi/5).

    The reduction rules are phi^2 = phi + 1 and s^2 = (2 + phi)/4.
    """

    __slots__ = ("w", "x", "y", "z", "den")

    def __init__(self, w: int, x: int, y: int, z: int, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator in PentaReal")
        if den < 0:
            w, x, y, z, den = -w, -x, -y, -z, -den
        g = gcd(gcd(gcd(abs(w), abs(x)), gcd(abs(y), abs(z))), den)
        if g > 1:
            w //= g
            x //= g
            y //= g
            z //= g
            den //= g
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("PentaReal is immutable")

    @classmethod
    def from_golden(cls, p: GoldenNum, q: GoldenNum | None = None) -> "PentaReal":
        """Embed p + q*s with p, q in Q(phi)."""
        if q is None:
            return cls(p.a_num, p.b_num, 0, 0, p.den)
        return cls(p.a_num * q.den, p.b_num * q.den,
                   q.a_num * p.den, q.b_num * p.den, p.den * q.den)

    def golden_parts(self) -> tuple[GoldenNum, GoldenNum]:
        """Return (p, q) with self = p + q*s."""
        return (GoldenNum(self.w, self.x, self.den),
                GoldenNum(self.y, self.z, self.den))

    def __add__(self, other):
        other = _coerce_penta(other)
        if other is NotImplemented:
            return NotImplemented
        d1, d2 = self.den, other.den
        return PentaReal(self.w * d2 + other.w * d1, self.x * d2 + other.x * d1,
                         self.y * d2 + other.y * d1, self.z * d2 + other.z * d1,
                         d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return PentaReal(-self.w, -self.x, -self.y, -self.z, self.den)

    def __sub__(self, other):
        other = _coerce_penta(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_penta(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_penta(other)
        if other is NotImplemented:
            return NotImplemented
        w1, x1, y1, z1 = self.w, self.x, self.y, self.z
        w2, x2, y2, z2 = other.w, other.x, other.y, other.z
        xx = x1 * x2
        yy = y1 * y2
        zz = z1 * z2
        yz = y1 * z2 + z1 * y2
        xz = x1 * z2 + z1 * x2
        # scaled by 4 to clear the s^2 = (2+phi)/4 denominators
        w = 4 * (w1 * w2 + xx) + 2 * yy + yz + 3 * zz
        x = 4 * (w1 * x2 + x1 * w2 + xx + zz) + yy + 3 * yz
        y = 4 * (w1 * y2 + y1 * w2 + xz)
        z = 4 * (w1 * z2 + z1 * w2 + x1 * y2 + y1 * x2 + xz)
        return PentaReal(w, x, y, z, 4 * self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "PentaReal":
        p, q = self.golden_parts()
        norm = p * p - q * q * _S_SQUARED
        if norm.is_zero():
            raise ZeroDivisionError("inverse of zero PentaReal")
        inv_norm = norm.inverse()
        return PentaReal.from_golden(p * inv_norm, -q * inv_norm)

    def __truediv__(self, other):
        other = _coerce_penta(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_penta(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def sign(self) -> int:
        w, x, y, z = self.w, self.x, self.y, self.z
        if y == 0 and z == 0:
            return _sign_golden_ints(w, x)
        if w == 0 and x == 0:
            return _sign_golden_ints(y, z)
        m = max(abs(w), abs(x), abs(y), abs(z))
        if m < _FAST_SIGN_LIMIT:
            est = w + x * PHI_FLOAT + (y + z * PHI_FLOAT) * SIN72_FLOAT
            if abs(est) > 1e-9 * (abs(w) + abs(x) * 2 + abs(y) + abs(z) * 2 + 1):
                return 1 if est > 0 else -1
        sp = _sign_golden_ints(w, x)
        sq = _sign_golden_ints(y, z)
        if sp == 0:
            return sq
        if sq == 0 or sp == sq:
            return sp
        # compare p^2 against q^2 * s^2 exactly in Q(phi), scaled by 4
        da = 4 * (w * w + x * x) - (2 * y * y + 2 * y * z + 3 * z * z)
        db = 4 * (2 * w * x + x * x) - (y * y + 6 * y * z + 4 * z * z)
        d = _sign_golden_ints(da, db)
        return d if sp > 0 else -d

    def is_zero(self) -> bool:
        return self.w == 0 and self.x == 0 and self.y == 0 and self.z == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = _coerce_penta(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.w == other.w and self.x == other.x and self.y == other.y
                and self.z == other.z and self.den == other.den)

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z, self.den))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return (self.w + self.x * PHI_FLOAT
                + (self.y + self.z * PHI_FLOAT) * SIN72_FLOAT) / self.den

    def __repr__(self):
        return (f"PentaReal({self.w}, {self.x}, {self.y}, {self.z}, "
                f"{self.den})")


def _coerce_penta(v):
    if isinstance(v, PentaReal):
        return v
    if isinstance(v, GoldenNum):
        return PentaReal(v.a_num, v.b_num, 0, 0, v.den)
    if isinstance(v, int):
        return PentaReal(v, 0, 0, 0)
    if isinstance(v, Fraction):
        return PentaReal(v.numerator, 0, 0, 0, v.denominator)
    return NotImplemented


_S_SQUARED = GoldenNum(2, 1, 4)  # s^2 = (2 + phi)/4

P_ZERO = PentaReal(0, 0, 0, 0)
P_ONE = PentaReal(1, 0, 0, 0)
SIN72 = PentaReal(0, 0, 1, 0)           # s
SIN36 = PentaReal(0, 0, -1, 1)          # s*(phi - 1)
COS72 = PentaReal(-1, 1, 0, 0, 2)       # (phi - 1)/2
COS36 = PentaReal(0, 1, 0, 0, 2)        # phi/2
