"""Circle-bundle projections S(xi) -> N for oriented real plane bundles xi.

The projection is loose exactly when chi(N) lies in e(xi)(H_2(N; Z)) and
chi(N) is even; this holds in every base dimension n >= 1.  Torsion in H_2
contributes nothing to the integer image of the Euler class.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from functools import reduce

from .abelian import in_gcd_image
from .verdict import Outcome, RuleApplication, Verdict

__all__ = ["PlaneBundleInput", "decide_plane_bundle", "decide_cp_tensor", "cp_tensor_criterion"]

_PLANE = (
    "Oriented plane bundle xi over closed N: mu(forg(Omega_2(N; -xi))) = ker(w_2(xi): H_2(N;Z) -> Z/2), "
    "and e(xi) reduces to w_2(xi) mod 2, so chi(N) lies in e(xi)(ker w_2) iff chi(N) is in "
    "e(xi)(H_2(N;Z)) and even. That is the condition for omega(p) = 0, and for p to be loose."
)
_DIM2 = (
    "n = 2: omega(p) = 0 gives e(p*(TN)) = 0 by the cohomology Gysin sequence, so p*(TN) has a "
    "nowhere-zero section over the 2-skeleton, and over all of M because pi_2(S^1) = 0."
)
_CP = (
    "xi = t-th tensor power of the canonical line bundle over CP(q), q > 1: chi(CP(q)) = q + 1 and "
    "e(xi)(H_2(CP(q);Z)) = tZ, so p is loose iff t divides q + 1 and q is odd."
)


@dataclass(frozen=True)
class PlaneBundleInput:
    chi_N: int
    euler_evals: tuple[int, ...]
    torsion_w2: tuple[int, ...] = field(default=())
    dim_N: int = 2

    def __post_init__(self):
        object.__setattr__(self, "euler_evals", tuple(int(e) for e in self.euler_evals))
        object.__setattr__(self, "torsion_w2", tuple(int(b) for b in self.torsion_w2))
        if not isinstance(self.chi_N, int):
            raise TypeError(f"chi_N must be an integer, got {self.chi_N!r}")
        if self.dim_N < 1:
            raise ValueError(f"dim_N must be >= 1, got {self.dim_N}")
        if any(b not in (0, 1) for b in self.torsion_w2):
            raise ValueError(f"w_2 values are bits, got {self.torsion_w2}")


def decide_plane_bundle(data: PlaneBundleInput) -> Verdict:
    in_image = in_gcd_image(data.euler_evals, data.chi_N)
    even = data.chi_N % 2 == 0
    computed = {
        "chi_N": data.chi_N,
        "euler_evals": list(data.euler_evals),
        "gcd": reduce(gcd, data.euler_evals, 0),
        "chi_in_image": in_image,
        "chi_even": even,
        "dim_N": data.dim_N,
        "assumption": "xi is an oriented real plane bundle over a closed manifold N",
    }
    if data.torsion_w2:
        computed["torsion_w2"] = list(data.torsion_w2)
        computed["torsion_note"] = "torsion classes map to 0 under e(xi); w_2 on torsion does not enter"
    trace = []
    outcome = Outcome.LOOSE if in_image and even else Outcome.NOT_LOOSE
    if data.dim_N == 2:
        trace.append(RuleApplication("bundle.dim2_extension", _DIM2))
    trace.append(RuleApplication("bundle.plane_criterion", _PLANE, computed, concludes=outcome))
    return Verdict(outcome, trace)


def cp_tensor_criterion(q: int, t: int) -> bool:
    """Direct form of the CP(q) criterion: t | q + 1 and q odd."""
    return (q + 1) % t == 0 and q % 2 == 1


def decide_cp_tensor(q: int, t: int) -> Verdict:
    """Looseness of S(L^t) -> CP(q), L the canonical complex line bundle."""
    if q <= 1:
        raise ValueError(f"need q > 1, got q={q}")
    if t < 1:
        raise ValueError(f"need tensor power t >= 1, got t={t}")
    direct = cp_tensor_criterion(q, t)
    delegated = decide_plane_bundle(PlaneBundleInput(chi_N=q + 1, euler_evals=(t,), dim_N=2 * q))
    if direct != (delegated.outcome is Outcome.LOOSE):
        raise AssertionError(f"CP({q}) criterion and plane-bundle criterion disagree for t={t}")
    outcome = delegated.outcome
    trace = [
        RuleApplication(
            "bundle.cp_setup",
            "delegate to the plane-bundle criterion with chi_N = q + 1, e(xi) on the H_2 generator = t",
            {"q": q, "t": t, "chi_N": q + 1, "euler_evals": [t], "dim_N": 2 * q},
            plumbing=True,
        ),
        *delegated.trace[:-1],
        RuleApplication(
            delegated.trace[-1].rule_id,
            delegated.trace[-1].citation,
            delegated.trace[-1].computed,
        ),
        RuleApplication(
            "bundle.cp_criterion",
            _CP,
            {"t_divides_q_plus_1": (q + 1) % t == 0, "q_odd": q % 2 == 1, "delegated": outcome.value},
            concludes=outcome,
        ),
    ]
    return Verdict(outcome, trace)
