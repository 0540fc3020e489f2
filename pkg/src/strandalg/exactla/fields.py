from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient ring: rationals, a prime field, or the integers.

    Elements are Fractions over Q, ints in [0, p) over F_p and plain ints
    over Z. Z only supports what Smith normal form needs.
    """

    kind: str
    p: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("Q", "Fp", "Z"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "Fp" and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, s: str) -> "FieldSpec":
        t = s.strip().lower()
        if t in ("q", "qq", "rational", "rationals"):
            return QQ
        if t in ("z", "zz", "integers"):
            return ZZ
        if t.startswith("f") and t[1:].isdigit():
            return cls("Fp", int(t[1:]))
        raise ValueError(f"unknown field {s!r} (use q, z or f<prime>)")

    @property
    def name(self) -> str:
        return {"Q": "q", "Z": "z"}.get(self.kind, f"f{self.p}")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    def __call__(self, x) -> int | Fraction:
        if self.kind == "Q":
            return Fraction(x)
        if self.kind == "Z":
            if isinstance(x, Rational) and x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return int(x)
        if isinstance(x, Rational) and not isinstance(x, int):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "Fp" else a + b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "Fp" else a * b

    def neg(self, a):
        return (-a) % self.p if self.kind == "Fp" else -a

    def inv(self, a):
        if self.kind == "Z":
            raise ValueError("no inverses over Z")
        if self.kind == "Fp":
            return pow(a, -1, self.p)
        return 1 / Fraction(a)

    def __str__(self) -> str:
        return {"Q": "Q", "Z": "Z"}.get(self.kind, f"F{self.p}")


QQ = FieldSpec("Q")
ZZ = FieldSpec("Z")
F2 = FieldSpec("Fp", 2)
F3 = FieldSpec("Fp", 3)
