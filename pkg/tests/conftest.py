import pytest

from mopkit.families import FamilySpec

# Admissible parameter sets, one per family key, used across the suite.
PARAMS = {
    ("Jacobi", None): dict(alpha=["1/3"], beta="1/2"),
    ("JacobiPineiro", "alpha"): dict(alpha=["1/3", "3/4"], beta="1/2"),
    ("JacobiPineiro", "beta"): dict(alpha="1/3", beta=["3/4", "1/5"]),
    ("Wilson", None): dict(a=1, b=["1/2"], c="3/2", d=2),
    ("MultipleWilson", None): dict(a=1, b=["1/2", "5/4"], c="3/2", d=2),
    ("Racah", None): dict(alpha=["1/2"], beta="1/3", gamma=-6, delta="2/7"),
    ("MultipleRacah", "alpha"): dict(alpha=["1/2", "1/5"], beta="1/3", gamma=-6, delta="2/7"),
    ("MultipleRacah", "beta"): dict(alpha=-6, beta=["1/2", "1/5"], gamma="1/3", delta="2/7"),
    ("MultipleRacah", "gammadelta"): dict(alpha=-6, beta=["1/2", "3/5"], gamma=["1/3", "13/30"],
                                          delta=["2/7", "13/70"]),
    ("ContinuousDualHahn", None): dict(a="1/2", b=["1/3"], c="2/3"),
    ("MultipleContinuousDualHahn", None): dict(a="1/2", b=["1/3", "3/4"], c="2/3"),
    ("DualHahn", None): dict(gamma=["1/2"], delta=["1/3"], N=5),
    ("MultipleDualHahn", None): dict(gamma=["1/2", "1/5"], delta=["1/3", "19/30"], N=5),
    ("MeixnerPollaczek", None): dict(lam="1/2", w=["1/2"]),
    ("MultipleMeixnerPollaczek", None): dict(lam="1/2", w=["1/2", 2]),
    ("ContinuousHahn", None): dict(a="1/2", b=["1/3"], c="2/3", d="5/4"),
    ("MultipleContinuousHahn", None): dict(a="1/2", b=["1/3", "3/4"], c="2/3", d="5/4"),
    ("Hahn", "alpha"): dict(alpha=["1/2", "1/3"], beta="1/4", N=6),
    ("Hahn", "beta"): dict(alpha="1/2", beta=["1/3", "1/4"], N=6),
    ("MeixnerI", None): dict(beta="3/2", c=["1/3", "1/2"]),
    ("MeixnerII", None): dict(beta=["3/2", "1/3"], c="1/2"),
    ("Kravchuk", None): dict(p=["1/3", "1/2"], N=6),
    ("Charlier", None): dict(a=[1, 2]),
    ("LaguerreI", None): dict(alpha=["1/2", "1/3"]),
    ("LaguerreII", None): dict(alpha="1/2", c=[1, 2]),
    ("MultipleHermite", None): dict(c=[1, 2]),
}


def make_spec(key):
    tag, variant = key
    return FamilySpec.create(tag, variant, **PARAMS[key])


def key_id(key):
    return key[0] if key[1] is None else f"{key[0]}[{key[1]}]"


@pytest.fixture(params=list(PARAMS), ids=[key_id(k) for k in PARAMS])
def family_key(request):
    return request.param


# one summary line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = {}


def record_acceptance(number: int, passed: bool, detail: str):
    ACCEPTANCE[number] = (passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
