"""Arithmetic in prime fields GF(p).

Elements are plain residues tagged with their modulus.  The hot loops in
:mod:`algequiv.linalg` work on bare Python ints and reduce once per dot
product; :class:`FieldElement` is the checked, user-facing value type.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .errors import DenominatorVanishes, ModulusMismatch, ZeroInverse

__all__ = [
    "PrimeModulus",
    "FieldElement",
    "M31",
    "P63",
    "M127",
    "PRESETS",
    "is_probable_prime",
    "ff_add",
    "ff_sub",
    "ff_mul",
    "ff_neg",
    "ff_inv",
    "ff_from_rational",
    "ff_sample_uniform",
    "make_stream",
    "derive_seed",
]

# Miller-Rabin with these bases is exact below this bound.
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _miller_rabin_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rounds: int = 40) -> bool:
    """Miller-Rabin test; deterministic for n < 3.3e24, probabilistic above."""
    if n < 2:
        return False
    for q in _DETERMINISTIC_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_miller_rabin_round(n, d, s, a) for a in _DETERMINISTIC_BASES):
        return False
    if n < _DETERMINISTIC_LIMIT:
        return True
    # fixed seed keeps the verdict for a given n reproducible
    rng = random.Random(n)
    return all(
        _miller_rabin_round(n, d, s, rng.randrange(2, n - 1)) for _ in range(rounds)
    )


@dataclass(frozen=True)
class PrimeModulus:
    """A prime p >= 5 together with a preset tag (m31, p63, m127 or custom)."""

    p: int
    tag: str = "custom"

    def __post_init__(self):
        if self.tag not in _PRESET_VALUES and self.tag != "custom":
            raise ValueError(f"unknown preset tag {self.tag!r}")
        if self.tag != "custom":
            if self.p != _PRESET_VALUES[self.tag]:
                raise ValueError(f"preset {self.tag} must have p={_PRESET_VALUES[self.tag]}")
            return
        if self.p < 5:
            raise ValueError(f"modulus must be at least 5, got {self.p}")
        if not is_probable_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "PrimeModulus":
        """Accept ``m31``, ``p63``, ``m127`` or a decimal literal."""
        key = str(text).strip().lower()
        if key in PRESETS:
            return PRESETS[key]
        try:
            value = int(key, 10)
        except ValueError:
            raise ValueError(f"not a prime preset or decimal integer: {text!r}") from None
        for preset in PRESETS.values():
            if preset.p == value:
                return preset
        return cls(value)

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    def __str__(self):
        return self.tag if self.tag != "custom" else str(self.p)


_PRESET_VALUES = {
    "m31": 2**31 - 1,
    "p63": 2**63 - 25,
    "m127": 2**127 - 1,
}

M31 = PrimeModulus(_PRESET_VALUES["m31"], "m31")
P63 = PrimeModulus(_PRESET_VALUES["p63"], "p63")
M127 = PrimeModulus(_PRESET_VALUES["m127"], "m127")
PRESETS = {"m31": M31, "p63": P63, "m127": M127}


@dataclass(frozen=True)
class FieldElement:
    residue: int
    modulus: PrimeModulus

    def __post_init__(self):
        object.__setattr__(self, "residue", int(self.residue) % self.modulus.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus.p != self.modulus.p:
                raise ModulusMismatch(
                    f"cannot combine elements mod {self.modulus.p} and mod {other.modulus.p}"
                )
            return other.residue
        if isinstance(other, int):
            return other
        return NotImplemented

    def _wrap(self, value: int) -> "FieldElement":
        return FieldElement(value, self.modulus)

    def __add__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return self._wrap(self.residue + r)

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return self._wrap(self.residue - r)

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return self._wrap(r - self.residue)

    def __mul__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return self._wrap(self.residue * r)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.residue)

    def __truediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return self * ff_inv(self._wrap(r))

    def inverse(self) -> "FieldElement":
        return ff_inv(self)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.residue == other.residue and self.modulus.p == other.modulus.p
        if isinstance(other, int):
            return self.residue == other % self.modulus.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus.p))

    def __int__(self):
        return self.residue

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"FieldElement({self.residue}, mod {self.modulus})"


def ff_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def ff_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def ff_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def ff_neg(a: FieldElement) -> FieldElement:
    return -a


def inv_mod(a: int, p: int) -> int:
    """Inverse of a bare residue; raises ZeroInverse for a = 0 mod p."""
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    # CPython computes negative-exponent pow with the extended Euclidean algorithm
    return pow(a, -1, p)


def ff_inv(a: FieldElement) -> FieldElement:
    return FieldElement(inv_mod(a.residue, a.modulus.p), a.modulus)


def ff_from_rational(num: int, den: int, m: PrimeModulus) -> FieldElement:
    """Embed the rational num/den into GF(p)."""
    if den % m.p == 0:
        raise DenominatorVanishes(f"denominator {den} vanishes mod {m.p}")
    return FieldElement(num * inv_mod(den, m.p), m)


def ff_sample_uniform(m: PrimeModulus, rng: random.Random) -> FieldElement:
    # randrange draws getrandbits(p.bit_length()) and rejects values >= p,
    # so the result is exactly uniform
    return FieldElement(rng.randrange(m.p), m)


def make_stream(seed: int) -> random.Random:
    """The random stream type used throughout: a seeded Mersenne Twister."""
    return random.Random(seed)


def derive_seed(master_seed: int, index: int) -> int:
    """A 64-bit seed that is a pure function of (master_seed, index)."""
    digest = hashlib.blake2b(f"{master_seed}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")
