import random

from slackmat import (GF, QQ, Ideal, Matroid, PointConfiguration, grassmannian_ideal,
                      mh_matrix, plucker_ideal, plucker_vector, slack_ideal,
                      slack_of_realization, universal_ideal, universal_projections)
from slackmat.grassmann import PlueckerRing


def test_gr24_single_relation():
    pr = PlueckerRing(2, 4)
    I = plucker_ideal(pr)
    assert [str(g) for g in I.gens] == ["p_{14}*p_{23} - p_{13}*p_{24} + p_{12}*p_{34}"]


def test_gr1n_zero():
    assert not plucker_ideal(PlueckerRing(1, 5)).gens


def test_plucker_relations_vanish_on_random_matrices():
    F = GF(32003)
    random.seed(17)
    for (r, n) in [(2, 4), (3, 5), (3, 6)]:
        pr = PlueckerRing(r, n, field=F)
        I = plucker_ideal(pr)
        trials = 100 if (r, n) == (3, 6) else 30
        for _ in range(trials):
            cfg = PointConfiguration(
                F, [[random.randrange(32003) for _ in range(n)] for _ in range(r)])
            pv = plucker_vector(cfg)
            assign = {pr.index[s]: v for s, v in pv.items()}
            for g in I.gens:
                assert g.evaluate(assign).constant_value() == 0


def test_plucker_vector_examples(m4, m4_realization):
    cfg = PointConfiguration(QQ, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    pv = plucker_vector(cfg)
    assert pv[(0, 1, 2)] == 1
    pv4 = plucker_vector(m4_realization)
    m = m4[0]
    zeros = {s for s, v in pv4.items() if v == 0}
    assert zeros == {tuple(sorted(b)) for b in m.nonbases}
    # proportionality under a left GL action
    A = [[1, 2, 0], [0, 1, 0], [3, 0, 1]]  # det 1
    rows = [[sum(A[i][k] * m4_realization.entries[k][j] for k in range(3))
             for j in range(6)] for i in range(3)]
    pv_t = plucker_vector(PointConfiguration(QQ, rows))
    ratios = {s: (pv_t[s], pv4[s]) for s in pv4 if pv4[s] != 0}
    vals = {QQ.div(a, b) for a, b in ratios.values()}
    assert len(vals) == 1


def test_grassmannian_ideal_u24_and_rank1():
    u24 = Matroid.from_bases(4, 2, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    G = grassmannian_ideal(u24)
    assert [str(g) for g in G.gens] == ["p_{14}*p_{23} - p_{13}*p_{24} + p_{12}*p_{34}"]
    r1 = Matroid.from_bases(1, 1, [(1,)])
    assert not grassmannian_ideal(r1).gens


def test_grassmannian_ideal_vanishes_on_realizations(m4, m4_realization):
    m = m4[0]
    G = grassmannian_ideal(m)
    pr = G.pluecker
    pv = plucker_vector(m4_realization)
    assign = {pr.index[s]: v for s, v in pv.items()}
    for g in G.gens:
        assert g.evaluate(assign).constant_value() == 0


def test_mh_matrix_printed_form(m4):
    m, meta, _ = m4
    mh = mh_matrix(m, (2, 4, 6), QQ, hyperplane_order=meta["hyperplane_order"])
    got = [[str(e) for e in row] for row in mh.rows]
    assert got == [
        ["x_{1,2}", "p_{124}", "p_{126}", "p_{146}"],
        ["x_{3,2}", "-p_{234}", "-p_{236}", "p_{346}"],
        ["x_{5,2}", "p_{245}", "-p_{256}", "-p_{456}"],
    ]


def test_mh_two_columns_for_minimal_hyperplane(m4):
    m, meta, _ = m4
    mh = mh_matrix(m, (2, 5), QQ, hyperplane_order=meta["hyperplane_order"])
    assert len(mh.rows[0]) == 2  # exactly one independent spanning subset


def test_sign_coherence_on_realization(m4, m4_realization):
    # every M_H, evaluated at one realization's slack entries and Pluecker
    # coordinates, has rank 1: all 2-minors vanish
    m, meta, _ = m4
    U = universal_ideal(m, QQ, hyperplane_order=meta["hyperplane_order"])
    sym, pr = U.joint
    S = slack_of_realization(m4_realization, m, meta["hyperplane_order"])
    pv = plucker_vector(m4_realization)
    ring = U.ring
    assign = {}
    vals = S.entry_by_var(sym)
    for k in range(sym.nvars):
        assign[ring.index[sym.var_name(k)]] = vals[k]
    for s, v in pv.items():
        nm = pr.ring.names[pr.index[s]]
        if nm in ring.index:
            assign[ring.index[nm]] = v
    for g in U.gens:
        assert g.evaluate(assign).constant_value() == 0


def test_universal_projections_u23(u23):
    out = universal_projections(u23, QQ)
    assert out["status"] == "ok"
    slack_side = out["slack_side"]
    I = slack_ideal(u23, QQ)
    # compare in the slack ring by name
    conv = [I.ring.convert(g) for g in slack_side.gens]
    assert Ideal(I.ring, conv).equals(I)


def test_universal_projections_u24():
    u24 = Matroid.from_bases(4, 2, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    out = universal_projections(u24, QQ)
    assert out["status"] == "ok"
    P = grassmannian_ideal(u24)
    pl = out["pluecker_side"]
    conv = [P.ring.convert(g) for g in pl.gens]
    assert Ideal(P.ring, conv).equals(P)


def test_rank1_projections_zero():
    r1 = Matroid.from_bases(1, 1, [(1,)])
    out = universal_projections(r1, QQ)
    assert out["pluecker_side"].is_zero() and out["slack_side"].is_zero()
