import pytest

from hlbc.chains import (check_regular, conjugate, dump_chain, lambda_chain, lambda_weight,
                         mu_from_coefficients, omega_chain, omega_chain_length, positive_roots,
                         validate_chain)
from hlbc.weyl_bc import Root

# the chain for C3, lambda = (3,2,1), segment by segment
C3_321 = [
    [(1, -2), (1, -3), (1, -1), (1, 3), (1, 2)],
    [(1, -2)], [(1, -3), (1, -1), (1, 3)], [(1, -2), (2, -3), (2, -2), (2, 3)],
    [(1, -2)], [(1, -3), (2, -3)], [(1, -1)], [(1, -2), (2, -2)], [(1, -3), (2, -3), (3, -3)],
]

INSTANCES = [
    ("C", 2, (2, 1)), ("C", 2, (3, 1)), ("C", 2, (3, 2)), ("C", 3, (3, 2, 1)),
    ("C", 3, (4, 2, 1)), ("C", 4, (4, 3, 2, 1)),
    ("B", 2, (2, 1)), ("B", 2, (2, 2, 1)), ("B", 2, (2, 1, 1)), ("B", 3, (3, 2, 1)),
    ("B", 3, (3, 3, 2, 1, 1)),
]


def test_c3_chain_verbatim():
    ch = lambda_chain("C", 3, (3, 2, 1))
    assert ch.m == 22
    got = [[tuple(r) for r in ch.roots[s.start:s.stop]] for s in ch.segments]
    assert got == C3_321
    groups = [s.group for s in ch.segments]
    assert groups == [3, 2, 2, 2, 1, 1, 1, 1, 1]
    assert [ch.levels[k] for k, r in enumerate(ch.roots) if r == Root(1, -2)] == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("type_,n,parts", INSTANCES)
def test_validator_accepts_generated_chains(type_, n, parts):
    ch = lambda_chain(type_, n, parts)
    rep = validate_chain(type_, n, ch.roots, ch.lam)
    assert rep, rep


def test_validator_rejects_swaps():
    ch = lambda_chain("C", 2, (2, 1))
    roots = list(ch.roots)
    assert not validate_chain("C", 2, roots[:-1], ch.lam)
    roots[0], roots[1] = roots[1], roots[0]
    rep = validate_chain("C", 2, roots, ch.lam)
    assert not rep and rep.rule == "R2"


def test_omega_lengths():
    for t in "BC":
        for n in range(2, 6):
            for k in range(1, n + 1):
                assert omega_chain_length(t, n, k) == sum(len(seg) for seg in omega_chain(t, n, k))


def test_regularity():
    with pytest.raises(ValueError, match="lambda not regular"):
        check_regular("C", 2, (2, 2))
    with pytest.raises(ValueError, match="lambda not regular"):
        check_regular("C", 4, (3, 2, 1, 0))
    with pytest.raises(ValueError, match="lambda not regular"):
        check_regular("B", 3, (3, 1))
    assert check_regular("B", 2, (2, 2, 1)) == (2, 2, 1)


def test_weights_and_helpers():
    assert lambda_weight("C", 3, (3, 2, 1)) == (6, 4, 2)
    assert lambda_weight("B", 2, (2, 1)) == (3, 1)
    assert mu_from_coefficients((1, 1)) == (2, 1)
    assert conjugate((3, 2, 1)) == (3, 2, 1)
    assert conjugate((4, 2)) == (2, 2, 1, 1)
    assert len(positive_roots("B", 3)) == 9


def test_dump_marks_boundaries():
    text = dump_chain(lambda_chain("C", 2, (2, 1)))
    assert text.count("||") == 1
    assert text.splitlines()[0] == "(1,-2)"
