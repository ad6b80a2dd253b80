import json
import math

import numpy as np
import pytest

from scatdet.divisor import (
    STANDARD_RECT,
    DivisorCount,
    DivisorEntry,
    Rectangle,
    argument_principle_net,
    corollary_alpha,
    count_divisor,
    log_corollary_alpha,
    phivalue_reassembly,
    predicted_sign,
    verify_theorem,
    winding_number,
    zeta_real_sign_check,
)
from scatdet.errors import ContourTooCloseError, DomainError, NonIntegerWindingError
from scatdet.scattering import ACCEPTANCE_FAMILIES, ScatteringFamily, central_value, phi_eval

IDS = [f.label for f in ACCEPTANCE_FAMILIES]
MODULAR = ScatteringFamily.modular()
SMALL_RECT = Rectangle(0.6, 1.5, -0.5, 0.5)


def test_count_examples():
    c = count_divisor(MODULAR)
    assert (c.zeros, c.poles) == (0, 1)
    c = count_divisor(ScatteringFamily.gamma0((2, 3)))
    assert (c.zeros, c.poles) == (4, 4) and {e.location for e in c.breakdown} == {1.0}
    c = count_divisor(ScatteringFamily.gamma0plus((2, 3, 5)))
    assert (c.zeros, c.poles) == (0, 1)


@pytest.mark.parametrize("primes", [(2,), (3,), (5,), (2, 3), (2, 3, 5), (2, 3, 5, 7)])
def test_gamma0_counts_and_parity(primes):
    r = len(primes)
    c = count_divisor(ScatteringFamily.gamma0(primes))
    assert (c.zeros, c.poles) == (r * 2 ** (r - 1), 2**r)
    assert c.zeros + c.poles == 2 ** (r - 1) * (r + 2)
    assert ((c.zeros + c.poles) % 2 == 1) == (r == 1)


@pytest.mark.parametrize("family", ACCEPTANCE_FAMILIES, ids=IDS)
def test_count_invariants_and_json(family):
    c = count_divisor(family)
    assert c.zeros == sum(max(e.order, 0) for e in c.breakdown)
    assert c.poles == sum(max(-e.order, 0) for e in c.breakdown)
    assert all(e.location > 0.5 for e in c.breakdown)
    blob = json.loads(json.dumps(c.to_json()))
    assert blob["zeros"] == c.zeros and blob["poles"] == c.poles
    assert len(blob["breakdown"]) == len(c.breakdown) and blob["justifications"]


def test_ledger_rejects_points_left_of_half():
    with pytest.raises(DomainError):
        DivisorCount((DivisorEntry(0.4, 1, "bogus"),), ())


def test_zeta_sign_grid():
    assert zeta_real_sign_check()
    assert any("passed" in note for note in count_divisor(MODULAR).justifications)


def test_no_sign_change_on_real_axis():
    """phi has no real zeros/poles right of 1/2 except at s = 1: its sign is constant on each side."""
    for family in ACCEPTANCE_FAMILIES:
        left = phi_eval(family, np.linspace(0.51, 0.99, 200)).real
        right = phi_eval(family, np.linspace(1.01, 8, 400)).real  # g_1^(-2s) underflows further out
        assert np.all(np.sign(left) == np.sign(left[0]))
        assert np.all(np.sign(right) == np.sign(right[0]))


@pytest.mark.parametrize("family", ACCEPTANCE_FAMILIES, ids=IDS)
def test_argument_principle_matches_ledger(family):
    net = count_divisor(family)
    assert argument_principle_net(family, STANDARD_RECT) == net.zeros - net.poles
    assert argument_principle_net(family, SMALL_RECT) == net.zeros - net.poles


def test_argument_principle_examples():
    assert argument_principle_net(MODULAR, SMALL_RECT) == -1
    assert argument_principle_net(ScatteringFamily.gamma0((2, 3)), SMALL_RECT) == 0


def test_polynomial_control():
    rect = Rectangle(0.6, 2.5, -1, 1)
    f = lambda s: (s - 1) * (s - 2)  # noqa: E731
    assert winding_number(lambda s: 1 / (s - 1) + 1 / (s - 2), rect, f=f) == 2


def test_contour_too_close():
    rect = Rectangle(1.0 - 1e-9, 2.0, -0.5, 0.5)
    with pytest.raises(ContourTooCloseError):
        # odd node count puts a node on the real axis, 1e-9 from the zero
        winding_number(lambda s: 1 / (s - 1), rect, f=lambda s: s - 1, nodes=2049)


def test_non_integer_winding():
    with pytest.raises(NonIntegerWindingError):
        winding_number(lambda s: 0.5 / (s - 1), SMALL_RECT)


def test_rectangle_validation():
    with pytest.raises(DomainError):
        Rectangle(1.0, 0.5, 0, 1)


def test_verify_theorem_examples():
    t = verify_theorem(MODULAR)
    assert (t.zeros + t.poles, t.sign_d1, t.predicted, t.ok) == (1, 1, -1, True)
    t = verify_theorem(ScatteringFamily.gamma0((3,)))
    assert (t.zeros + t.poles, t.sign_d1, t.predicted, t.ok) == (3, -1, 1, True)
    t = verify_theorem(ScatteringFamily.gamma0plus((2,)))
    assert (t.zeros + t.poles, t.sign_d1, t.predicted, t.ok) == (1, 1, -1, True)


@pytest.mark.parametrize("family", ACCEPTANCE_FAMILIES, ids=IDS)
def test_theorem_holds(family):
    t = verify_theorem(family)
    assert t.ok and t.to_json()["ok"]
    assert predicted_sign(family) == t.predicted == round(central_value(family).germ_value)


def test_corollary_values():
    assert corollary_alpha(MODULAR) == pytest.approx(1 / math.sqrt(math.pi), rel=1e-14)
    assert corollary_alpha(ScatteringFamily.gamma0plus((2, 3))) == pytest.approx(1.3819765979, rel=1e-10)
    assert log_corollary_alpha(MODULAR) == pytest.approx(-0.5 * math.log(math.pi), rel=1e-14)


@pytest.mark.parametrize("family", ACCEPTANCE_FAMILIES, ids=IDS)
def test_reassembly_is_unit(family):
    assert corollary_alpha(family) > 0
    value = phivalue_reassembly(family)
    assert abs(abs(value) - 1) < 1e-10
    assert round(value) == predicted_sign(family)
