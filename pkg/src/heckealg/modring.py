"""Tiny exact Z/m arithmetic wrapper used as a coefficient ring."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ModInt:
    value: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus)

    def _lift(self, other) -> "ModInt":
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ValueError("modulus mismatch")
            return other
        if isinstance(other, int):
            return ModInt(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        return ModInt(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return ModInt(-self.value, self.modulus)

    def __sub__(self, other):
        other = self._lift(other)
        return ModInt(self.value - other.value, self.modulus)

    def __mul__(self, other):
        other = self._lift(other)
        return ModInt(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return ModInt(pow(self.value, k, self.modulus), self.modulus)

    def inverse(self) -> "ModInt":
        return ModInt(pow(self.value, -1, self.modulus), self.modulus)

    def ring_one(self) -> "ModInt":
        return ModInt(1, self.modulus)

    def is_zero(self) -> bool:
        return self.value == 0
