"""Maps f: S^m -> N and the looseness homomorphism pi_m(N) -> pi^S_{m-n}.

For a general target the obstruction is chi(N) times a stable degree class
that the caller supplies; for N = S^n that class is the stable suspension of
[f] and chi(S^n) = 1 + (-1)^n.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .abelian import GroupElement
from .stems import StemTable, TableError, stem_group
from .verdict import Outcome, RuleApplication, Verdict

__all__ = ["SphereMapInput", "sphere_euler", "omega_class", "decide_sphere_map", "TableIncomplete"]


class TableIncomplete(TableError):
    """The stem a computation needs has no row in the table."""


def sphere_euler(n: int) -> int:
    return 1 + (-1) ** n


@dataclass(frozen=True)
class SphereMapInput:
    m: int
    n: int
    stable_class: GroupElement
    chi_N: Optional[int] = None  # None: N = S^n

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"need m, n >= 1, got m={self.m}, n={self.n}")
        if self.m < self.n:
            raise ValueError(f"need m >= n, got m={self.m}, n={self.n}")

    @property
    def target_is_sphere(self) -> bool:
        return self.chi_N is None

    @property
    def chi(self) -> int:
        return sphere_euler(self.n) if self.chi_N is None else self.chi_N

    @property
    def stem(self) -> int:
        return self.m - self.n


def _check_group(data: SphereMapInput, table: Optional[StemTable]):
    group = stem_group(data.stem, table)
    if group is None:
        raise TableIncomplete(f"table incomplete: no entry for stem {data.stem} = m - n")
    if data.stable_class.group != group:
        raise ValueError(
            f"class lives in {data.stable_class.group}, but stem {data.stem} is recorded as {group}"
        )


def omega_class(data: SphereMapInput, table: Optional[StemTable] = None) -> GroupElement:
    """chi(N) times the stable class, in pi^S_{m-n}; identically zero when n = 1."""
    _check_group(data, table)
    if data.n == 1:
        return data.stable_class.group.zero()
    return data.chi * data.stable_class


_KERNEL = (
    "The obstruction defines a homomorphism omega: pi_m(N) -> Omega^fr_{m-n} = pi^S_{m-n}, "
    "omega(f) = chi(N) * deg(f); for N = S^n the degree is the stable suspension, so "
    "omega = (1 + (-1)^n) E^infinity. For m < 2n - 2 the map is loose iff omega(f) = 0."
)
_NONZERO = (
    "omega(f) != 0. Maps homotopic to coincidence-free pairs have omega = 0 in any dimension, "
    "so f is not loose."
)
_UNSTABLE = (
    "omega(f) = 0 but m >= 2n - 2, where the vanishing of omega is not known to suffice."
)
_CIRCLE = (
    "n = 1: omega is identically zero; S^1 carries a nowhere-zero vector field and any map into "
    "it can be pushed along it off itself."
)


def decide_sphere_map(data: SphereMapInput, table: Optional[StemTable] = None) -> Verdict:
    omega = omega_class(data, table)
    stable = data.m < 2 * data.n - 2
    inputs = {
        "m": data.m,
        "n": data.n,
        "stem": data.stem,
        "group": str(data.stable_class.group),
        "class": list(data.stable_class.coords),
        "target": f"S^{data.n}" if data.target_is_sphere else "general N",
        "chi_N": data.chi,
        "stable_range": stable,
    }
    if data.target_is_sphere and data.m > 2 * data.n - 2:
        inputs["caveat"] = (
            "m > 2n - 2: the class is taken as the given stable suspension; "
            "E^infinity need not be bijective here"
        )
    setup = RuleApplication("sphere.setup", "inputs", inputs, plumbing=True)
    computed = {"omega": list(omega.coords), "omega_is_zero": omega.is_zero()}

    if data.n == 1:
        outcome = Outcome.LOOSE
        step = RuleApplication("sphere.circle_target", _CIRCLE, computed, concludes=outcome)
    elif not omega.is_zero():
        outcome = Outcome.NOT_LOOSE
        step = RuleApplication("sphere.nonzero_obstruction", _NONZERO, computed, concludes=outcome)
    elif stable:
        outcome = Outcome.LOOSE
        step = RuleApplication("sphere.kernel_criterion", _KERNEL, computed, concludes=outcome)
    else:
        outcome = Outcome.UNKNOWN
        computed["reason"] = "obstruction vanishes, outside stable range"
        step = RuleApplication("sphere.outside_stable_range", _UNSTABLE, computed, concludes=outcome)
    return Verdict(outcome, (setup, step))
