"""Looseness of the Stiefel projections p: V_{r,k} -> G_{r,k} and p~: V_{r,k} -> G~_{r,k}.

The two projections have isomorphic pulled-back tangent bundles, hence the
same selfcoincidence obstruction; ``oriented`` only changes trace wording.
Rules are tried in a fixed order and the first decisive one wins:

R1  k = 1 (codimension zero)
R2  p*(TG) has a nowhere-zero section: k = r - 1, or k odd and r even
R3  the pair (9, 5)
R4  chi(G_{r,k}) = 0
R5  the weak obstruction 2 chi(G_{r,k}) [SO(k)] in pi^S_{d(k)}
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .abelian import TriBool, is_zero_multiple
from .grassmann import in_stable_range, stiefel_dims
from .stems import StemTable, so_class_order
from .verdict import Outcome, RuleApplication, Verdict

__all__ = ["decide_stiefel", "corollary_sweep", "corollary_expectation", "SweepRow", "RULES"]

RULES = {
    "R1": "stiefel.R1_line_case",
    "R2": "stiefel.R2_nowhere_zero_section",
    "R3": "stiefel.R3_pair_9_5",
    "R4": "stiefel.R4_euler_zero",
    "R5": "stiefel.R5_weak_obstruction",
}

_R1 = (
    "k = 1: V_{r,1} = S^{r-1}; p is the double cover S^{r-1} -> RP^{r-1} and p~ is the "
    "identity of S^{r-1}. In codimension zero omega = chi(target) * deg is the only "
    "obstruction, and it vanishes exactly when r is even."
)
_R2 = (
    "k = r-1, or k = r-1 != 0 (mod 2): p*(TG_{r,k}) = Hom(p*gamma, p*gamma^perp) = "
    "k * p*(gamma^perp) has a nowhere-zero section (p*gamma^perp is an oriented line "
    "bundle when k = r-1; G_{r,k} has odd dimension k(r-k) otherwise), so p and p~ are loose."
)
_R3 = (
    "(r, k) = (9, 5): a = [SO(5) in V_{9,5}] in Omega^fr_10(V_{9,5}) lies in the image of "
    "Omega^fr_10(S^4) = Z/6 + Z/2, so omega(p) = 2 chi(G_{9,5}) a = 12a = 0; "
    "(9, 5) is in the stable range, so p and p~ are loose."
)
_R4 = (
    "chi(G_{r,k}) = 0, so omega(p) = chi(G_{r,k}) * deg(p) = 0. Within m < 2n - 2 the "
    "vanishing of omega is equivalent to looseness; outside it only omega = 0 is known."
)
_R5 = (
    "Pushing omega(p) to a point gives omega'(p) = chi(G_{r,k}) [O(k)] = 2 chi(G_{r,k}) [SO(k)] "
    "in pi^S_{d(k)}. omega' != 0 forces omega(p) != 0, and maps homotopic to coincidence-free "
    "pairs have omega = 0, so p is not loose. For r >= 2k the fibre inclusion SO(k) -> V_{r,k} "
    "is nulhomotopic, omega' carries all of omega(p), and omega' = 0 means loose."
)
_SETUP = "inputs and derived dimensions"


def _require(r: int, k: int):
    if not (isinstance(r, int) and isinstance(k, int)) or k < 1 or r <= k:
        raise ValueError(
            f"Stiefel projections are decided for r > k >= 1 (k = r is a map onto a point), "
            f"got r={r}, k={k}"
        )


def decide_stiefel(r: int, k: int, oriented: bool = False, table: Optional[StemTable] = None) -> Verdict:
    """Decide whether the projection from V_{r,k} onto G_{r,k} (or G~_{r,k}) is loose."""
    _require(r, k)
    data = stiefel_dims(r, k)
    two_chi = 2 * data.chi
    name = "p~: V_{r,k} -> G~_{r,k}" if oriented else "p: V_{r,k} -> G_{r,k}"
    trace = [
        RuleApplication(
            "stiefel.setup",
            _SETUP,
            {
                "projection": name,
                "r": r,
                "k": k,
                "m": data.m,
                "n": data.n,
                "d(k)": data.d,
                "chi": data.chi,
                "2chi": two_chi,
                "stable_range": data.stable_range,
                "ell": max(2 * k - r, 0),
            },
            plumbing=True,
        )
    ]

    def conclude(rule: str, citation: str, outcome: Outcome, **computed) -> Verdict:
        trace.append(RuleApplication(RULES[rule], citation, computed, concludes=outcome))
        return Verdict(outcome, trace)

    if k == 1:
        outcome = Outcome.LOOSE if r % 2 == 0 else Outcome.NOT_LOOSE
        return conclude("R1", _R1, outcome, r_even=r % 2 == 0)

    if k == r - 1 or (k % 2 == 1 and r % 2 == 0):
        return conclude(
            "R2", _R2, Outcome.LOOSE,
            k_equals_r_minus_1=k == r - 1,
            parity_reading="k = r-1 != 0 (mod 2) read as: k odd and r even",
        )

    if (r, k) == (9, 5):
        return conclude("R3", _R3, Outcome.LOOSE, **{"2chi": two_chi, "omega": "12a = 0"})

    if data.chi == 0:
        if in_stable_range(r, k):
            return conclude("R4", _R4, Outcome.LOOSE, omega="0", stable_range=True)
        return conclude(
            "R4", _R4, Outcome.UNKNOWN, omega="0", stable_range=False,
            reason="obstruction vanishes, outside stable range",
        )

    knowledge = so_class_order(k, table)
    zero = is_zero_multiple(knowledge, two_chi)
    computed = {
        "2chi": two_chi,
        "stem": data.d,
        "order[SO(k)]": str(knowledge),
        "2chi*[SO(k)]=0": zero.value,
        "r>=2k": r >= 2 * k,
    }
    if zero is TriBool.FALSE:
        return conclude("R5", _R5, Outcome.NOT_LOOSE, **computed)
    if zero is TriBool.TRUE and r >= 2 * k:
        return conclude("R5", _R5, Outcome.LOOSE, **computed)
    if zero is TriBool.UNKNOWN:
        reason = "order knowledge insufficient: only a divisibility bound on [SO(k)] is known"
        if r < 2 * k:
            reason += "; also r < 2k, so the fibre-inclusion part of omega is not determined by omega'"
    else:
        reason = (
            f"r < 2k: fibre-inclusion part of omega not determined by omega' "
            f"(the fibre inclusion only factors through V_{{{k},{2 * k - r}}})"
        )
    return conclude("R5", _R5, Outcome.UNKNOWN, reason=reason, **computed)


@dataclass(frozen=True)
class SweepRow:
    r: int
    verdict: Verdict
    expected: Outcome
    note: str = ""

    @property
    def agrees(self) -> bool:
        return self.verdict.outcome is self.expected


def corollary_expectation(k: int, r: int) -> tuple[Outcome, str]:
    """Closed-form answer for k = 2, 3, 5; (5, 7) is outside the k = 5 statement."""
    if k == 2:
        return Outcome.LOOSE, "k = 2: always loose"
    if k == 3:
        loose = r % 2 == 0 or r % 12 == 1
        return (Outcome.LOOSE if loose else Outcome.NOT_LOOSE), "k = 3: loose iff r even or r = 1 (mod 12)"
    if k == 5:
        if r == 7:
            return Outcome.UNKNOWN, "k = 5, r = 7: excluded from the closed form, must stay Unknown"
        loose = r % 6 != 5
        return (Outcome.LOOSE if loose else Outcome.NOT_LOOSE), "k = 5: loose iff r != 5 (mod 6)"
    raise ValueError(f"closed forms exist only for k in (2, 3, 5), got k={k}")


def corollary_sweep(k: int, r_max: int, table: Optional[StemTable] = None) -> list[SweepRow]:
    if k not in (2, 3, 5):
        raise ValueError(f"sweeps are supported for k in (2, 3, 5), got k={k}")
    if r_max < k + 1:
        raise ValueError(f"need r_max >= k + 1 = {k + 1}, got {r_max}")
    rows = []
    for r in range(k + 1, r_max + 1):
        expected, note = corollary_expectation(k, r)
        rows.append(SweepRow(r, decide_stiefel(r, k, table=table), expected, note))
    return rows
