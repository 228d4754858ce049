import pytest

from eqschub import core, fixtures, torus
from eqschub.combinatorics import to_bitstring
from eqschub.core import SchubertOp, WedgeElement, make_context
from eqschub.oracle import mu_leibniz_matrix
from eqschub.polyring import complete_h


def mu(ctx, *I):
    return torus.mu_wedge(ctx, I)


def test_requires_torus_mode():
    with pytest.raises(ValueError):
        torus.mu_from_eps(make_context(4, 2, "generic"))


@pytest.mark.parametrize("n", range(1, 7))
def test_mu_basis_change_is_unitriangular_and_inverse(n):
    ctx = make_context(n, 1, "torus")
    mb = torus.mu_from_eps(ctx)
    for i in range(1, n + 1):
        assert mb.eps_of_mu[i][i] == 1
        assert max(mb.eps_of_mu[i]) == i
    for J in ctx.basis:
        w = mu(ctx, *J)
        assert torus.convert(torus.convert(w, "epsilon"), "mu") == w


@pytest.mark.parametrize("n", range(2, 7))
def test_d1_rank_one_rule(n):
    ctx = make_context(n, 1, "torus")
    for j in range(1, n + 1):
        assert torus.eps_path(1, mu(ctx, j)) == torus.d1_mu(j, ctx)
    assert torus.d1_mu(n, ctx) == mu(ctx, n).scale(ctx.Y(n))


@pytest.mark.parametrize("n", range(2, 7))
def test_di_closed_form(n):
    ctx = make_context(n, 1, "torus")
    for j in range(1, n + 1):
        for i in range(0, n + 2 - j):
            assert torus.di_mu(i, j, ctx) == torus.eps_path(i, mu(ctx, j))


def test_equivariant_pieri_example():
    ctx = make_context(4, 2, "torus")
    Y = ctx.Y
    got = torus.equivariant_pieri(1, (1, 3), ctx)
    assert got == WedgeElement(ctx, {(1, 4): ctx.one(), (2, 3): ctx.one(),
                                     (1, 3): Y(1) + Y(3)}, "mu")
    with pytest.raises(ValueError):
        torus.equivariant_pieri(1, (1, 5), ctx)


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (5, 3), (6, 3)])
def test_pieri_coefficients_positive_in_y_differences(n, k):
    # each coefficient is a polynomial in Y_j = y_j - y_1 with nonnegative coefficients
    ctx = make_context(n, k, "torus")
    for I in ctx.basis:
        for l in range(n + 1):
            for c in torus.equivariant_pieri(l, I, ctx).terms.values():
                in_Y = c.substitute({1: 0})  # y_j now stands for Y_j
                assert in_Y.substitute({j: ctx.Y(j) for j in range(2, n + 1)}) == c
                assert all(a > 0 for a in in_Y.terms.values())


def test_divisorial_is_shifted_d1():
    ctx = make_context(5, 2, "torus")
    for I in ctx.basis:
        d = torus.divisorial_pieri(I, ctx)
        full = torus.equivariant_pieri(1, I, ctx)
        shift = ctx.Y(1) + ctx.Y(2)
        assert d == full - mu(ctx, *I).scale(shift)


def test_divisorial_rule_g24():
    ctx = make_context(4, 2, "torus")
    rule = torus.divisorial_rule((1, 3), ctx)
    y = ctx.spec.var
    assert rule == {"1001": ctx.one(), "0110": ctx.one(), "0101": y(3) - y(2)}
    assert fixtures.divisorial_rules(ctx)[to_bitstring((1, 3), 4)] == rule


@pytest.mark.parametrize("n", range(2, 9))
def test_rank_one_gkm_identities(n):
    assert torus.gkm_identities(n)
    for i in range(n):
        assert torus.projective_gkm_class(i, n).satisfies_gkm()


def test_gkm_class_rejects_bad_components():
    S1 = torus.projective_gkm_class(1, 3)
    spec = S1.components[0].spec
    bad = torus.GkmClass((spec.zero(), spec.one(), spec.zero()))
    assert not bad.satisfies_gkm()


def test_g24_fixtures_consistent():
    ctx = make_context(4, 2, "torus")
    printed = fixtures.load_operators("printed", ctx)
    corrected = fixtures.load_operators("corrected", ctx)
    for I in ctx.basis:
        assert printed[I].diagonal() == corrected[I].diagonal()
        assert torus.gkm_check_diagonal(printed[I]).passed
    assert {tuple(d["operator"]) for d in fixtures.discrepancies()} == {(1, 3)}
    assert printed[(1, 2)] == SchubertOp.identity(ctx, "mu")


def test_mu_matrices_from_rank_one_rule():
    for n, k in ((4, 2), (5, 2), (5, 3)):
        ctx = make_context(n, k, "torus")
        for h in range(n + 1):
            assert [list(r) for r in torus.d_matrix_mu(h, ctx).matrix] == mu_leibniz_matrix(h, n, k)


def test_mu_operator_is_poincare_inverse():
    ctx = make_context(5, 2, "torus")
    for I in ctx.basis:
        op = torus.operator_matrix_mu(I, ctx)
        assert core.poincare(op) == mu(ctx, *I)


def test_gkm_detects_a_bad_diagonal():
    ctx = make_context(4, 2, "torus")
    op = torus.operator_matrix_mu((1, 3), ctx)
    m = [list(row) for row in op.matrix]
    m[1][1] = m[1][1] + ctx.spec.var(1)
    rep = torus.gkm_check_diagonal(SchubertOp(ctx, m, "mu"))
    assert not rep.passed
    assert all((1, 3) in (e.source, e.target) for e in rep.failures())


def test_grassmannian_edges_g24():
    ctx = make_context(4, 2, "torus")
    edges = list(torus.grassmannian_edges(ctx))
    assert len(edges) == 12
    for I, J, a, b in edges:
        assert a in I and b in J and a not in J and b not in I


def test_complete_h_closed_form_sample():
    ctx = make_context(5, 1, "torus")
    Y = ctx.Y
    got = torus.di_mu(2, 2, ctx)
    assert got.coeff((2,)) == complete_h(2, [Y(2)])
    assert got.coeff((3,)) == complete_h(1, [Y(2), Y(3)])
    assert got.coeff((4,)) == 1
