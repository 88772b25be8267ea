import random

import pytest

from looseness.abelian import FgAbGroup
from looseness.spheres import SphereMapInput, TableIncomplete, decide_sphere_map, omega_class, sphere_euler
from looseness.stems import default_table, stem_group
from looseness.verdict import Outcome

LOOSE, NOT_LOOSE, UNKNOWN = Outcome.LOOSE, Outcome.NOT_LOOSE, Outcome.UNKNOWN


def element(j, coords):
    return stem_group(j).element(coords)


def test_eta_on_even_sphere_is_killed():
    data = SphereMapInput(9, 8, element(1, [1]))
    assert omega_class(data).is_zero()
    assert decide_sphere_map(data).outcome is LOOSE


def test_odd_sphere_obstruction_vanishes():
    data = SphereMapInput(10, 7, element(3, [5]))
    assert omega_class(data).is_zero()


def test_zero_class():
    assert omega_class(SphereMapInput(7, 4, element(3, [0]))).is_zero()


def test_identity_of_even_sphere_not_loose():
    verdict = decide_sphere_map(SphereMapInput(4, 4, element(0, [1])))
    assert verdict.outcome is NOT_LOOSE
    assert verdict.trace[-1].computed["omega"] == [2]


def test_nonzero_obstruction_outside_stable_range():
    # pi^S_7 = Z/240, 2*1 != 0, 11 >= 2*4 - 2
    verdict = decide_sphere_map(SphereMapInput(11, 4, element(7, [1])))
    assert verdict.outcome is NOT_LOOSE


def test_vanishing_outside_stable_range_is_unknown():
    verdict = decide_sphere_map(SphereMapInput(11, 4, element(7, [120])))
    assert verdict.outcome is UNKNOWN
    assert "caveat" in verdict.trace[0].computed


def test_circle_target():
    assert decide_sphere_map(SphereMapInput(3, 1, element(2, [1]))).outcome is LOOSE


def test_general_target_uses_given_euler_number():
    data = SphereMapInput(10, 7, element(3, [1]), chi_N=3)
    assert omega_class(data).coords == (3,)
    assert decide_sphere_map(data).outcome is NOT_LOOSE
    assert decide_sphere_map(SphereMapInput(10, 7, element(3, [8]), chi_N=3)).outcome is LOOSE


def test_absent_stem_is_an_error():
    with pytest.raises(TableIncomplete, match="table incomplete"):
        omega_class(SphereMapInput(30, 10, FgAbGroup([2]).element([1])))


def test_class_must_live_in_stem_group():
    with pytest.raises(ValueError):
        omega_class(SphereMapInput(12, 9, FgAbGroup([2]).element([1])))


def test_input_validation():
    with pytest.raises(ValueError):
        SphereMapInput(3, 4, element(0, [1]))
    with pytest.raises(ValueError):
        SphereMapInput(0, 0, element(0, [1]))


def _random_element(group, rng):
    return group.element([rng.randrange(n) if n else rng.randrange(-10**6, 10**6) for n in group.cyclic_orders])


def test_homomorphism_property():
    rng = random.Random(20260101)
    for j, entry in default_table().stems.items():
        for n in (2, 3, 6):
            for chi in (sphere_euler(n), 5, -7):
                for _ in range(200):
                    a, b = _random_element(entry.group, rng), _random_element(entry.group, rng)
                    lhs = omega_class(SphereMapInput(n + j, n, a + b, chi))
                    rhs = omega_class(SphereMapInput(n + j, n, a, chi)) + omega_class(SphereMapInput(n + j, n, b, chi))
                    assert lhs == rhs


def test_factor_two_for_even_spheres():
    rng = random.Random(7)
    for j, entry in default_table().stems.items():
        for n in (2, 4, 10):
            a = _random_element(entry.group, rng)
            assert omega_class(SphereMapInput(n + j, n, a)) == 2 * a


def test_no_loose_from_vanishing_alone_outside_stable_range():
    rng = random.Random(3)
    for j, entry in default_table().stems.items():
        for n in range(2, 12, 2):
            m = n + j
            if m < 2 * n - 2:
                continue
            for _ in range(20):
                verdict = decide_sphere_map(SphereMapInput(m, n, _random_element(entry.group, rng)))
                assert verdict.outcome is not LOOSE
