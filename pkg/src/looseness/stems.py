"""Stable stems and framed-bordism classes of invariantly framed SO(k).

All group structures come from a line-oriented data file (bundled as
``data/stems.txt``, overridable) in which every row carries a source string.
Nothing is guessed: a missing stem is reported as absent, and for SO(k) beyond
the tabulated range only divisibility facts are returned.
"""
from __future__ import annotations

import hashlib
import math
import shlex
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .abelian import Divides, Exact, FgAbGroup, OrderKnowledge

__all__ = [
    "StemEntry",
    "SoClassFact",
    "HomogeneousConstraint",
    "StemTable",
    "TableError",
    "InconsistentFacts",
    "parse_table",
    "load_table",
    "default_table",
    "stem_group",
    "so_class_order",
    "becker_schultz_constraint",
    "refine",
    "so_fibre_dim",
]


class TableError(ValueError):
    """Malformed or self-contradictory stems data file."""


class InconsistentFacts(ValueError):
    def __init__(self, a: OrderKnowledge, b: OrderKnowledge):
        super().__init__(f"inconsistent order facts: {a} and {b}")
        self.facts = (a, b)


@dataclass(frozen=True)
class StemEntry:
    j: int
    group: FgAbGroup
    source: str


@dataclass(frozen=True)
class SoClassFact:
    # an integer k >= 2, or "all" / "even" for facts covering a whole family
    k: Union[int, str]
    order: OrderKnowledge
    source: str

    def applies_to(self, k: int) -> bool:
        if self.k == "all":
            return True
        if self.k == "even":
            return k % 2 == 0
        return self.k == k


@dataclass(frozen=True)
class HomogeneousConstraint:
    """chi(B/G) for a proper closed subgroup G of a compact connected Lie group B."""

    euler_number: int
    description: str = ""


def refine(a: Optional[OrderKnowledge], b: Optional[OrderKnowledge]) -> Optional[OrderKnowledge]:
    """Combine two facts about the order of one class. ``None`` means no information."""
    if a is None:
        return b
    if b is None:
        return a
    if isinstance(a, Exact) and isinstance(b, Exact):
        if a.n != b.n:
            raise InconsistentFacts(a, b)
        return a
    if isinstance(a, Exact) or isinstance(b, Exact):
        exact, bound = (a, b) if isinstance(a, Exact) else (b, a)
        if bound.n % exact.n:
            raise InconsistentFacts(a, b)
        return exact
    return Divides(math.gcd(a.n, b.n))


def becker_schultz_constraint(chi: Union[int, HomogeneousConstraint]) -> Optional[OrderKnowledge]:
    """What chi(B/G) * [G] = 0 says about the order of [G]; ``None`` when chi = 0."""
    if isinstance(chi, HomogeneousConstraint):
        chi = chi.euler_number
    if chi == 0:
        return None
    return Divides(abs(chi))


def so_fibre_dim(k: int) -> int:
    """dim SO(k) = k(k-1)/2, the stem in which [SO(k)] lives."""
    return k * (k - 1) // 2


@dataclass(frozen=True)
class StemTable:
    stems: dict[int, StemEntry] = field(default_factory=dict)
    so_facts: tuple[SoClassFact, ...] = ()
    identifier: str = ""

    def stem_group(self, j: int) -> Optional[FgAbGroup]:
        entry = self.stems.get(j)
        return entry.group if entry else None

    def so_facts_for(self, k: int) -> list[SoClassFact]:
        return [f for f in self.so_facts if f.applies_to(k)]

    def so_class_order(self, k: int) -> OrderKnowledge:
        if k < 2:
            raise ValueError(f"[SO(k)] is only tabulated for k >= 2, got k={k}")
        knowledge = None
        for fact in self.so_facts_for(k):
            knowledge = refine(knowledge, fact.order)
        if knowledge is None:
            raise TableError(f"no fact about [SO({k})] in table {self.identifier}")
        return knowledge


def _parse_order_fact(kind: str, value: str) -> OrderKnowledge:
    if kind == "exact":
        return Exact(int(value))
    if kind == "divides":
        return Divides(int(value))
    raise ValueError(f"expected 'exact' or 'divides', got {kind!r}")


def parse_table(text: str, name: str = "<string>") -> StemTable:
    stems: dict[int, StemEntry] = {}
    facts: list[SoClassFact] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        try:
            tokens = shlex.split(raw, comments=True)
        except ValueError as exc:
            raise TableError(f"{name}:{lineno}: {exc}") from None
        if not tokens:
            continue
        try:
            if tokens[0] == "stem":
                if len(tokens) != 4:
                    raise ValueError('expected: stem <j> <orders|trivial> "<source>"')
                j = int(tokens[1])
                if j < 0:
                    raise ValueError(f"stem degree must be nonnegative, got {j}")
                if j in stems:
                    raise ValueError(f"duplicate entry for stem {j}")
                orders = () if tokens[2] == "trivial" else tuple(int(x) for x in tokens[2].split(","))
                stems[j] = StemEntry(j, FgAbGroup(orders), tokens[3])
            elif tokens[0] == "soclass":
                if len(tokens) != 5:
                    raise ValueError('expected: soclass <k|all|even> exact|divides <n> "<source>"')
                k: Union[int, str] = tokens[1] if tokens[1] in ("all", "even") else int(tokens[1])
                if isinstance(k, int) and k < 2:
                    raise ValueError(f"SO(k) facts need k >= 2, got {k}")
                facts.append(SoClassFact(k, _parse_order_fact(tokens[2], tokens[3]), tokens[4]))
            else:
                raise ValueError(f"unknown record type {tokens[0]!r}")
            if not tokens[-1].strip():
                raise ValueError("empty source string")
        except ValueError as exc:
            raise TableError(f"{name}:{lineno}: {exc}") from None

    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]
    table = StemTable(stems, tuple(facts), f"{name} sha256:{digest}")
    _check_consistency(table, name)
    return table


def _check_consistency(table: StemTable, name: str):
    specific = {f.k for f in table.so_facts if isinstance(f.k, int)}
    # families start at k = 2 and 3, so these witness every family combination
    for k in sorted(specific | {2, 3}):
        try:
            table.so_class_order(k)
        except (InconsistentFacts, TableError) as exc:
            raise TableError(f"{name}: facts about [SO({k})] disagree: {exc}") from None


def load_table(path: Union[str, Path]) -> StemTable:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise TableError(f"cannot read stems table {path}: {exc}") from None
    return parse_table(text, path.name)


@lru_cache(maxsize=None)
def default_table() -> StemTable:
    text = resources.files("looseness").joinpath("data/stems.txt").read_text(encoding="utf-8")
    return parse_table(text, "bundled:stems.txt")


def stem_group(j: int, table: Optional[StemTable] = None) -> Optional[FgAbGroup]:
    """The recorded group pi^S_j, or ``None`` if the table has no row for ``j``."""
    return (table or default_table()).stem_group(j)


def so_class_order(k: int, table: Optional[StemTable] = None) -> OrderKnowledge:
    """Everything the table implies about the order of [SO(k)] in pi^S_{k(k-1)/2}."""
    return (table or default_table()).so_class_order(k)
