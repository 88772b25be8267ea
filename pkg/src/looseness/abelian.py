"""Finitely generated abelian groups given as direct sums of cyclic groups.

A group is a tuple of cyclic orders: ``0`` stands for a copy of Z and
``n >= 2`` for Z/n.  Presentations are kept as given (no Smith form); every
query implemented here is independent of the presentation.

>>> G = FgAbGroup([2, 3])
>>> element_order(G.element([1, 1]))
6
>>> is_zero_multiple(Exact(12), 8)
<TriBool.FALSE: 'false'>
>>> in_gcd_image([4, 6], 2)
True
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence, Union

__all__ = [
    "FgAbGroup",
    "GroupElement",
    "Exact",
    "Divides",
    "OrderKnowledge",
    "TriBool",
    "INFINITE",
    "element_order",
    "is_zero_multiple",
    "in_gcd_image",
    "parse_order_knowledge",
]

INFINITE = math.inf


class TriBool(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    def __bool__(self):
        raise TypeError("TriBool has no truth value; compare against TriBool members")


@dataclass(frozen=True)
class FgAbGroup:
    cyclic_orders: tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(int(n) for n in self.cyclic_orders)
        if any(n < 0 for n in orders):
            raise ValueError(f"cyclic orders must be nonnegative, got {orders}")
        object.__setattr__(self, "cyclic_orders", tuple(n for n in orders if n != 1))

    @property
    def rank(self) -> int:
        return sum(1 for n in self.cyclic_orders if n == 0)

    @property
    def is_trivial(self) -> bool:
        return not self.cyclic_orders

    def exponent(self) -> int:
        """Least e >= 1 killing the group, or 0 if it has a free summand."""
        if self.rank:
            return 0
        return reduce(math.lcm, self.cyclic_orders, 1)

    def element(self, coords: Iterable[int]) -> GroupElement:
        return GroupElement(self, tuple(coords))

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * len(self.cyclic_orders))

    def generators(self) -> list[GroupElement]:
        gens = []
        for i in range(len(self.cyclic_orders)):
            coords = [0] * len(self.cyclic_orders)
            coords[i] = 1
            gens.append(self.element(coords))
        return gens

    def __str__(self):
        if self.is_trivial:
            return "0"
        return " + ".join("Z" if n == 0 else f"Z/{n}" for n in self.cyclic_orders)

    def encode(self) -> str:
        """Data-file spelling: comma-separated orders, or ``trivial``."""
        if self.is_trivial:
            return "trivial"
        return ",".join(str(n) for n in self.cyclic_orders)


@dataclass(frozen=True)
class GroupElement:
    group: FgAbGroup
    coords: tuple[int, ...] = field(default=())

    def __post_init__(self):
        orders = self.group.cyclic_orders
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != len(orders):
            raise ValueError(
                f"element of {self.group} needs {len(orders)} coordinates, got {len(coords)}"
            )
        coords = tuple(c % n if n else c for c, n in zip(coords, orders))
        object.__setattr__(self, "coords", coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check_same(self, other: GroupElement):
        if other.group != self.group:
            raise ValueError(f"elements live in different groups: {self.group} vs {other.group}")

    def __add__(self, other: GroupElement) -> GroupElement:
        self._check_same(other)
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> GroupElement:
        return GroupElement(self.group, tuple(-a for a in self.coords))

    def __sub__(self, other: GroupElement) -> GroupElement:
        return self + (-other)

    def __mul__(self, t: int) -> GroupElement:
        if not isinstance(t, int):
            return NotImplemented
        return GroupElement(self.group, tuple(t * a for a in self.coords))

    __rmul__ = __mul__

    def __str__(self):
        return f"({', '.join(map(str, self.coords))}) in {self.group}"


@dataclass(frozen=True)
class Exact:
    """The class has order exactly ``n``; ``Exact(1)`` is the zero class."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"an order must be positive, got {self.n}")

    def __str__(self):
        return f"Exact({self.n})"


@dataclass(frozen=True)
class Divides:
    """The order of the class is some divisor of ``n``."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"an order bound must be positive, got {self.n}")

    def __str__(self):
        return f"Divides({self.n})"


OrderKnowledge = Union[Exact, Divides]


def parse_order_knowledge(text: str) -> OrderKnowledge:
    """Inverse of ``str`` on :class:`Exact` / :class:`Divides`."""
    text = text.strip()
    for cls in (Exact, Divides):
        prefix = cls.__name__ + "("
        if text.startswith(prefix) and text.endswith(")"):
            return cls(int(text[len(prefix):-1]))
    raise ValueError(f"not an order fact: {text!r}")


def element_order(g: GroupElement) -> Union[int, float]:
    """Least n >= 1 with n*g = 0, or ``INFINITE`` if a free coordinate is nonzero."""
    order = 1
    for c, n in zip(g.coords, g.group.cyclic_orders):
        if n == 0:
            if c != 0:
                return INFINITE
            continue
        order = math.lcm(order, n // math.gcd(n, c))
    return order


def is_zero_multiple(knowledge: OrderKnowledge, t: int) -> TriBool:
    """Decide whether ``t * x = 0`` for a class x of which only ``knowledge`` is known.

    With a mere divisibility bound a failed test stays UNKNOWN: the true order
    may be a proper divisor that does divide ``t``.
    """
    if t % knowledge.n == 0:
        return TriBool.TRUE
    if isinstance(knowledge, Exact):
        return TriBool.FALSE
    return TriBool.UNKNOWN


def in_gcd_image(evals: Sequence[int], c: int) -> bool:
    """Is ``c`` in the image of Z^s -> Z sending the i-th generator to ``evals[i]``?"""
    g = reduce(math.gcd, evals, 0)
    if g == 0:
        return c == 0
    return c % g == 0
