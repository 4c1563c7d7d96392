"""Exact scalar fields: the rationals and prime fields GF(p).

Rational scalars are `fractions.Fraction` (always in lowest terms with a
positive denominator, so equality is structural).  GF(p) scalars are plain
ints in [0, p).  No floating point anywhere.
"""

from fractions import Fraction

from .errors import StratakitError


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FieldSpec:
    """Exact field: either the rationals or GF(p).

    Provides the scalar operations; elements are Fraction (rationals) or
    canonical int residues (prime fields).
    """

    def __init__(self, p=None):
        if p is not None and not _is_prime(p):
            raise StratakitError(f"{p} is not prime")
        self.p = p

    @property
    def is_rational(self):
        return self.p is None

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self):
        return hash(("FieldSpec", self.p))

    def __repr__(self):
        return "Q" if self.p is None else f"GF({self.p})"

    # -- element constructors ------------------------------------------------

    def of(self, n, d=1):
        if self.p is None:
            return Fraction(n, d)
        if d % self.p == 0:
            raise ZeroDivisionError("denominator divisible by p")
        return n * pow(d, -1, self.p) % self.p

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def parse_scalar(self, text):
        """Parse '3', '-2' or '3/4' into a canonical scalar."""
        text = text.strip()
        if "/" in text:
            n, d = text.split("/", 1)
            return self.of(int(n), int(d))
        return self.of(int(text))

    def format_scalar(self, a):
        return str(a)


QQ = FieldSpec()


def GF(p):
    return FieldSpec(p)
