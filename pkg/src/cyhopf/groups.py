"""Finite abelian groups in invariant-factor form, their elements and characters.

A group is a direct product Z_{n_1} x ... x Z_{n_r}.  Elements and characters
are both stored as exponent vectors reduced mod n_i, which makes equality
canonical and products O(r).  Character values live in the cyclotomic field
of order m = lcm(n_i), the exponent of the group, so all scalars of one
session share a single field.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Iterator

from .cyclotomic import CycloNumber, root_of_unity
from .errors import GroupMismatch, GroupTooLarge, InputError

ENUMERATION_BOUND = 10**6


@dataclass(frozen=True)
class AbelianGroup:
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        if any(n < 1 for n in self.invariant_factors):
            raise InputError(f"invariant factors must be >= 1: {self.invariant_factors}")
        object.__setattr__(self, "invariant_factors", tuple(int(n) for n in self.invariant_factors))
        object.__setattr__(self, "_interned", {})  # exponent tuple -> GroupElement
        object.__setattr__(self, "_mul_cache", {})  # (exp, exp) -> GroupElement

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        m = 1
        for n in self.invariant_factors:
            m = m * n // gcd(m, n)
        return m

    def identity(self) -> GroupElement:
        return self.element((0,) * self.rank)

    def element(self, exponents) -> GroupElement:
        """Interned element constructor; exponents are reduced mod n_i."""
        key = tuple(int(e) % n for e, n in zip(exponents, self.invariant_factors))
        if len(key) != self.rank:
            raise InputError(f"element needs {self.rank} exponents, got {len(key)}")
        got = self._interned.get(key)
        if got is None:
            got = GroupElement(self, key)
            self._interned[key] = got
        return got

    def generator(self, i: int) -> GroupElement:
        exps = [0] * self.rank
        exps[i] = 1
        return GroupElement(self, tuple(exps))

    def character(self, exponents) -> Character:
        return Character(self, tuple(exponents))

    def trivial_character(self) -> Character:
        return Character(self, (0,) * self.rank)

    def elements(self, bound: int = ENUMERATION_BOUND) -> Iterator[GroupElement]:
        """All elements exactly once, lexicographic in the exponent vectors."""
        if self.order > bound:
            raise GroupTooLarge(f"group order {self.order} exceeds bound {bound}")
        exps = [0] * self.rank
        while True:
            yield self.element(tuple(exps))
            for i in range(self.rank - 1, -1, -1):
                exps[i] += 1
                if exps[i] < self.invariant_factors[i]:
                    break
                exps[i] = 0
            else:
                return

    def characters(self, bound: int = ENUMERATION_BOUND) -> Iterator[Character]:
        for g in self.elements(bound):
            yield Character(self, g.exp)

    def to_json(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors)}

    @staticmethod
    def from_json(obj: dict) -> AbelianGroup:
        try:
            return AbelianGroup(tuple(int(n) for n in obj["invariant_factors"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed group: {obj!r}") from exc

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "Z1"
        return "x".join(f"Z{n}" for n in self.invariant_factors)


def _check_same_group(a, b) -> None:
    if a.group != b.group:
        raise GroupMismatch(f"operands live in {a.group} and {b.group}")


@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup
    exp: tuple[int, ...]

    def __post_init__(self):
        ns = self.group.invariant_factors
        if len(self.exp) != len(ns):
            raise InputError(f"element needs {len(ns)} exponents, got {len(self.exp)}")
        exp = tuple(int(e) % n for e, n in zip(self.exp, ns))
        object.__setattr__(self, "exp", exp)
        object.__setattr__(self, "_hash", hash((ns, exp)))

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: GroupElement) -> GroupElement:
        group = self.group
        if other.group is not group:
            _check_same_group(self, other)
        cache = group._mul_cache
        key = (self.exp, other.exp)
        got = cache.get(key)
        if got is None:
            got = group.element(tuple(a + b for a, b in zip(self.exp, other.exp)))
            cache[key] = got
        return got

    def __pow__(self, n: int) -> GroupElement:
        return self.group.element(tuple(e * n for e in self.exp))

    def inverse(self) -> GroupElement:
        return self.group.element(tuple(-e for e in self.exp))

    def is_identity(self) -> bool:
        return not any(self.exp)

    def __str__(self) -> str:
        if self.is_identity():
            return "e"
        parts = []
        for i, e in enumerate(self.exp):
            if e == 1:
                parts.append(f"y{i + 1}")
            elif e:
                parts.append(f"y{i + 1}^{e}")
        return "*".join(parts)

    def to_json(self) -> dict:
        return {"exp": list(self.exp)}


@dataclass(frozen=True)
class Character:
    """Homomorphism to roots of unity, chi(gamma_i) = zeta_{n_i}^{a_i}."""

    group: AbelianGroup
    exp: tuple[int, ...]

    def __post_init__(self):
        ns = self.group.invariant_factors
        if len(self.exp) != len(ns):
            raise InputError(f"character needs {len(ns)} exponents, got {len(self.exp)}")
        object.__setattr__(self, "exp", tuple(int(a) % n for a, n in zip(self.exp, ns)))

    def value_exponent(self, g: GroupElement) -> int:
        """k with chi(g) = zeta_m^k, m the group exponent."""
        _check_same_group(self, g)
        m = self.group.exponent
        total = 0
        for a, e, n in zip(self.exp, g.exp, self.group.invariant_factors):
            total += a * e * (m // n)
        return total % m

    def __call__(self, g: GroupElement) -> CycloNumber:
        return root_of_unity(self.value_exponent(g), self.group.exponent)

    def __mul__(self, other: Character) -> Character:
        _check_same_group(self, other)
        return Character(self.group, tuple(a + b for a, b in zip(self.exp, other.exp)))

    def __pow__(self, n: int) -> Character:
        return Character(self.group, tuple(a * n for a in self.exp))

    def inverse(self) -> Character:
        return Character(self.group, tuple(-a for a in self.exp))

    def is_trivial(self) -> bool:
        return not any(self.exp)

    def __str__(self) -> str:
        if self.is_trivial():
            return "1"
        parts = []
        for i, a in enumerate(self.exp):
            if a == 1:
                parts.append(f"chi{i + 1}")
            elif a:
                parts.append(f"chi{i + 1}^{a}")
        return "*".join(parts)

    def to_json(self) -> dict:
        return {"exp": list(self.exp)}


def element_from_json(group: AbelianGroup, obj: dict) -> GroupElement:
    try:
        return GroupElement(group, tuple(int(e) for e in obj["exp"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed group element: {obj!r}") from exc


def character_from_json(group: AbelianGroup, obj: dict) -> Character:
    try:
        return Character(group, tuple(int(a) for a in obj["exp"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed character: {obj!r}") from exc


def parse_element(group: AbelianGroup, text: str) -> GroupElement:
    """Parse multiplicative notation like "y1^2*y3" ("e" is the identity)."""
    text = text.strip()
    if text in ("e", "1", ""):
        return group.identity()
    exps = [0] * group.rank
    for token in text.split("*"):
        token = token.strip()
        name, _, power = token.partition("^")
        if not name.startswith("y"):
            raise InputError(f"bad group element token {token!r}")
        try:
            idx = int(name[1:]) - 1
            k = int(power) if power else 1
        except ValueError as exc:
            raise InputError(f"bad group element token {token!r}") from exc
        if not 0 <= idx < group.rank:
            raise InputError(f"generator y{idx + 1} outside rank-{group.rank} group")
        exps[idx] += k
    return GroupElement(group, tuple(exps))
