import pytest

from hlbc.alcove import schwer_evaluate
from hlbc.chains import lambda_chain
from hlbc.characters import orbit_sum, weyl_character
from hlbc.exactpoly import t_binomial
from hlbc.formula import (compressed_fiber_demo, identity_suite, delta_identity_check, phi_identity_check,
                          tableau_evaluate, verify_compression)
from hlbc.weyl_bc import Root

INSTANCES = [("C", 2, (2, 1)), ("C", 2, (3, 1)), ("C", 2, (3, 2)), ("B", 2, (2, 1)),
             ("B", 2, (2, 2, 1)), ("B", 2, (2, 1, 1))]


@pytest.mark.parametrize("type_,n,parts", INSTANCES)
def test_dual_formula_and_fibers(type_, n, parts):
    ch = lambda_chain(type_, n, parts)
    P = tableau_evaluate(type_, n, parts)
    assert P == schwer_evaluate(ch)
    rep = verify_compression(type_, n, parts)
    assert rep.ok, rep.first_failure()
    assert sum(f.size for f in rep.fibers) == rep.pairs
    assert P.specialize_t(0) == weyl_character(type_, n, ch.lam).specialize_t(0)
    assert P.specialize_t(1) == orbit_sum(type_, n, ch.lam).specialize_t(1)


def test_fiber_report_c2():
    rep = verify_compression("C", 2, (2, 1))
    assert (rep.pairs, rep.fillings) == (70, 27)
    sizes = {f.filling.columns: (f.size, f.total) for f in rep.fibers}
    assert sizes[((-1,), (1, 2), (1, 2))] == (3, (1, -1))
    assert sizes[((-1,), (2, 1), (2, 1))] == (2, (0, 1, -1))
    assert sizes[((2,), (2, -1), (1, -2))] == (2, (1, -1))
    assert sizes[((-1,), (-2, -1), (-2, -1))] == (7, (1, -1))
    assert rep.to_json()["factor_exact"] == "70/27"


def test_compressed_fiber_does_not_factor():
    d = compressed_fiber_demo()
    assert d.w == (-2, -1)
    assert sorted(d.chains, key=len) == [[Root(1, -2)], [Root(1, -1), Root(1, -2), Root(2, -2)]]
    assert d.total == (1, -2, 2, -1)
    assert d.factored_form is None
    assert len({f.columns for f in d.fillings}) == 2


def test_identity_closed_forms():
    assert delta_identity_check((1,), 1, 1) == ((1,), (1,))
    lhs, rhs = phi_identity_check((2, 1), 1, 1)
    assert lhs == rhs == t_binomial(1, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_identity_suite_exhaustive(n):
    rep = identity_suite(n, trials=200, seed=n)
    assert rep.ok, rep.failures[:3]


def test_level_identity():
    rep = identity_suite(1, level_instances=[("C", 2, (3, 1)), ("B", 2, (2, 2, 1))])
    assert rep.ok, rep.failures[:3]
