"""Every single-coefficient perturbation of L, Y or Z must make a suite fail."""
import pytest
from mutation import TARGETS, install, mutants

from qaskey import algebra, eigen
from qaskey.core import QaskeyError
from qaskey.families import P2

MUTANTS = mutants()


def battery():
    """Names of the suites that fail; a suite that raises counts as failing."""
    checks = {
        "eigen": lambda: eigen.check_eigen(P2, 4),
        "nonsym": lambda: eigen.check_nonsym_eigen(P2, 3),
        "daha-identities": lambda: algebra.check_daha_identities(P2, 4),
        "nonsym-recurrence": lambda: eigen.check_nonsym_recurrence(P2, 3),
    }
    failed = []
    for name, fn in checks.items():
        try:
            if not fn().passed:
                failed.append(name)
        except (QaskeyError, ZeroDivisionError):
            failed.append(name)
    return failed


def test_battery_passes_unmutated():
    assert battery() == []


def test_every_target_has_mutants():
    assert {m.func for m in MUTANTS} == set(TARGETS)
    assert {m.kind for m in MUTANTS} == {"scale", "literal"}


@pytest.mark.parametrize("m", MUTANTS, ids=lambda m: m.label)
def test_mutant_is_killed(m, monkeypatch):
    install(monkeypatch, m)
    assert battery(), f"mutant {m.label} survived"
