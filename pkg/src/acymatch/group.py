"""Finitely generated abelian groups Z/m_1 x ... x Z/m_k.

A modulus of 0 stands for an infinite cyclic factor, so ``GroupSpec((14,))``
is Z/14Z, ``GroupSpec((2, 4))`` is Z/2 x Z/4 and ``GroupSpec((0,))`` is Z.
Elements are plain tuples of ints in canonical form: each coordinate over a
finite factor lies in ``[0, m)``.  Sorting tuples gives the lexicographic
canonical order used for every set this package prints.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import StructuralError, UnsupportedGroupError

Element = tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    moduli: tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(m) for m in self.moduli)
        object.__setattr__(self, "moduli", moduli)
        if not moduli:
            raise StructuralError("a group needs at least one cyclic factor")
        for m in moduli:
            if m == 1 or m < 0:
                raise StructuralError(f"invalid modulus {m}: use 0 (infinite) or >= 2")

    @classmethod
    def cyclic(cls, n: int) -> GroupSpec:
        return cls((n,))

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def is_finite(self) -> bool:
        return all(m != 0 for m in self.moduli)

    @property
    def order(self) -> int | None:
        """Group order, or None for an infinite group."""
        if not self.is_finite:
            return None
        return math.prod(self.moduli)

    def zero(self) -> Element:
        return (0,) * self.rank

    def _check(self, x: Sequence[int]) -> None:
        if len(x) != self.rank:
            raise StructuralError(
                f"element {tuple(x)} has {len(x)} coordinates, group {self} has rank {self.rank}"
            )

    def canonical(self, x: Sequence[int]) -> Element:
        self._check(x)
        return tuple(c % m if m else c for c, m in zip(x, self.moduli))

    def is_canonical(self, x: Sequence[int]) -> bool:
        return len(x) == self.rank and all(
            m == 0 or 0 <= c < m for c, m in zip(x, self.moduli)
        )

    def add(self, x: Element, y: Element) -> Element:
        self._check(x)
        self._check(y)
        return tuple(
            (a + b) % m if m else a + b for a, b, m in zip(x, y, self.moduli)
        )

    def neg(self, x: Element) -> Element:
        self._check(x)
        return tuple((-a) % m if m else -a for a, m in zip(x, self.moduli))

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def sumset(self, A: Iterable[Element], B: Iterable[Element]) -> list[Element]:
        """All sums a + b, deduplicated and sorted."""
        B = list(B)
        return sorted({self.add(a, b) for a in A for b in B})

    def is_subgroup_with_zero(self, B: Iterable[Element]) -> bool:
        """Whether B together with the identity is closed under + and negation."""
        H = set(B)
        H.add(self.zero())
        for x in H:
            if self.neg(x) not in H:
                return False
            for y in H:
                if self.add(x, y) not in H:
                    return False
        return True

    def elements(self) -> Iterator[Element]:
        """Every element of a finite group, in canonical order."""
        if not self.is_finite:
            raise UnsupportedGroupError(f"group {self} is infinite")
        return itertools.product(*(range(m) for m in self.moduli))

    def __str__(self) -> str:
        return format_spec(self)


def parse_spec(text: str) -> GroupSpec:
    """Parse ``"14"``, ``"2x4"`` or ``"0"`` into a GroupSpec."""
    parts = text.strip().lower().split("x")
    try:
        moduli = tuple(int(p) for p in parts)
    except ValueError:
        raise StructuralError(f"cannot parse group {text!r}") from None
    return GroupSpec(moduli)


def format_spec(spec: GroupSpec) -> str:
    return "x".join(str(m) for m in spec.moduli)


def parse_element(spec: GroupSpec, text: str) -> Element:
    try:
        coords = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise StructuralError(f"cannot parse element {text!r}") from None
    if not spec.is_canonical(coords):
        raise StructuralError(f"element {text!r} is not canonical in group {spec}")
    return coords


def parse_elements(spec: GroupSpec, text: str) -> list[Element]:
    """Parse a ``;``-separated element list.

    For rank-1 groups a plain comma list such as ``"1,3,5,7"`` is read as
    four elements.
    """
    text = text.strip()
    if not text:
        return []
    if ";" in text:
        chunks = [c for c in text.split(";") if c.strip()]
    elif spec.rank == 1:
        chunks = text.split(",")
    else:
        chunks = [text]
    return [parse_element(spec, c.strip()) for c in chunks]


def format_element(x: Element) -> str:
    return ",".join(str(c) for c in x)


def format_elements(xs: Iterable[Element]) -> str:
    return ";".join(format_element(x) for x in xs)


def format_set(xs: Iterable[Element]) -> str:
    """Render a set the way the acyclicity tables do: ``{2,6,12}`` or ``{(0,1),(1,0)}``."""
    xs = list(xs)
    if xs and len(xs[0]) == 1:
        return "{" + ",".join(str(x[0]) for x in xs) + "}"
    return "{" + ",".join("(" + format_element(x) + ")" for x in xs) + "}"
