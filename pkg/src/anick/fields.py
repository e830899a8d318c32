"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from fractions import Fraction


class FpElement:
    """Residue class modulo a prime, with field arithmetic."""

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def _check(self, other):
        if not isinstance(other, FpElement):
            if isinstance(other, int):
                return FpElement(other, self.p)
            return NotImplemented
        if other.p != self.p:
            raise ValueError("mixed moduli %d and %d" % (self.p, other.p))
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.val + other.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.val - other.val, self.p)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(other.val - self.val, self.p)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.val * other.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        if other.val == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return FpElement(self.val * pow(other.val, -1, self.p), self.p)

    def __rtruediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return FpElement(-self.val, self.p)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.val == other % self.p
        return isinstance(other, FpElement) and self.p == other.p and self.val == other.val

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __int__(self):
        return self.val

    def __repr__(self):
        return "FpElement(%d, %d)" % (self.val, self.p)

    def __str__(self):
        return str(self.val)


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class RationalField:
    """The field of rational numbers; elements are fractions.Fraction."""

    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value):
        return Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"

    def to_json(self):
        return {"type": "rational"}


class PrimeField:
    """The prime field GF(p); elements are FpElement residues."""

    name = "prime"

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("modulus %r is not prime" % (p,))
        self.p = p
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    def __call__(self, value):
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise ValueError("mixed moduli")
            return value
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            num = FpElement(value.numerator, self.p)
            if value.denominator == 1:
                return num
            return num / FpElement(value.denominator, self.p)
        return FpElement(value, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p

    def to_json(self):
        return {"type": "prime", "p": self.p}


QQ = RationalField()


def GF(p):
    return PrimeField(p)


def field_from_json(data):
    """Build a field from its JSON description {"type": ...}."""
    if data is None:
        return QQ
    kind = data.get("type")
    if kind == "rational":
        return QQ
    if kind == "prime":
        return PrimeField(int(data["p"]))
    raise ValueError("unknown field type %r" % (kind,))
