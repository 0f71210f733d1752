"""One test per acceptance criterion, at the stated limits.

The verdict lines are printed as they run and collected for the terminal
summary (see conftest.py).
"""
from unittest import mock

import pytest

from globcoalg import acceptance, coalgebra
from globcoalg.acceptance import format_line

from conftest import ACCEPTANCE_LINES

SEED = 0


def run(n):
    outcome = acceptance.CRITERIA[n](SEED)
    ACCEPTANCE_LINES[n] = outcome
    print(format_line(outcome))
    return outcome


@pytest.mark.parametrize("n", range(1, 10))
def test_criterion(n):
    outcome = run(n)
    assert outcome.passed, outcome.detail
    assert outcome.seconds < outcome.limit, f"{outcome.seconds:.2f}s over the {outcome.limit}s limit"


@pytest.mark.xfail(
    strict=True,
    reason="dropping the (-1)^k of the atom projection only changes signs, which vanish mod 2; "
           "the detectors 1 (cosymmetry, no atoms), 2 (cosymmetry over F2) and 6 (F2 atoms) cannot see it",
)
def test_criterion_10():
    outcome = run(10)
    assert outcome.passed, outcome.detail
    assert outcome.seconds < outcome.limit


def test_sign_and_parity_mutations_are_caught():
    verdicts = acceptance.mutation_verdicts(SEED)
    assert verdicts["globular coproduct sign"]
    assert verdicts["cup-i split parity"]


def test_atom_sign_mutation_is_caught_by_atom_validation():
    # the mutation is visible over Z, where globular atoms leave mu(C)
    assert acceptance.criterion_5(SEED).passed
    with mock.patch.object(coalgebra, "_atom_sign", lambda k: 1):
        assert not acceptance.criterion_5(SEED).passed
