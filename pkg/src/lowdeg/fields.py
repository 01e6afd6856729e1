"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Rational values are plain :class:`fractions.Fraction` instances, which are
always stored fully reduced with a positive denominator, so equality of
values is equality of representations.  Prime-field values are plain ints in
``[0, p)``.  A field object supplies the arithmetic, which keeps the matrix
routines in :mod:`lowdeg.projective` generic over both kinds of scalars.

Mixing scalars that belong to different fields is a contract violation and
raises :class:`~lowdeg.errors.MixedFieldError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import MixedFieldError

Scalar = Union[Fraction, int]

PRIME_LIMIT = 2**31


def is_prime(n: int) -> bool:
    """Trial division; plenty fast below 2**31."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class RationalField:
    """The rational numbers.  Use the module-level singleton ``QQ``."""

    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value: object) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        raise MixedFieldError(f"cannot interpret {value!r} as a rational number")

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def is_zero(self, a: Fraction) -> bool:
        return a == 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("lowdeg.QQ")

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


@dataclass(frozen=True)
class PrimeField:
    """The field with ``p`` elements, represented as ints in ``[0, p)``.

    ``p`` must be prime and below 2**31 so representatives stay machine-word
    sized.  ``p = 3`` is allowed on purpose: the Hesse configuration lives
    over GF(3).
    """

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise MixedFieldError(f"modulus must be an int, got {self.p!r}")
        if self.p >= PRIME_LIMIT:
            raise MixedFieldError(f"modulus {self.p} exceeds the 2**31 limit")
        if not is_prime(self.p):
            raise MixedFieldError(f"modulus {self.p} is not prime")

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1 % self.p

    def coerce(self, value: object) -> int:
        if isinstance(value, int) and not isinstance(value, bool):
            return value % self.p
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value) % self.p
        raise MixedFieldError(f"cannot interpret {value!r} as an element of {self.name}")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0

    def __repr__(self) -> str:
        return self.name


Field = Union[RationalField, PrimeField]


def require_same_field(a: Field, b: Field) -> Field:
    if a != b:
        raise MixedFieldError(f"cannot mix values from {a!r} and {b!r}")
    return a


def scalar_to_json(field: Field, value: Scalar) -> object:
    """Serialize one scalar: ``"p/q"`` strings over QQ (``q`` omitted when 1),
    ``{"val": v, "mod": p}`` objects over a prime field."""
    if isinstance(field, PrimeField):
        return {"val": int(value), "mod": field.p}
    return str(value)


def scalar_from_json(raw: object) -> tuple[Field, Scalar]:
    """Parse one serialized scalar, returning the field it declares."""
    if isinstance(raw, dict):
        if set(raw) != {"val", "mod"}:
            raise MixedFieldError(f"prime-field value must have keys val/mod, got {sorted(raw)}")
        field = PrimeField(raw["mod"])
        return field, field.coerce(raw["val"])
    if isinstance(raw, str):
        try:
            return QQ, Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise MixedFieldError(f"malformed rational {raw!r}") from exc
    if isinstance(raw, int) and not isinstance(raw, bool):
        return QQ, Fraction(raw)
    raise MixedFieldError(f"cannot parse scalar {raw!r}")
