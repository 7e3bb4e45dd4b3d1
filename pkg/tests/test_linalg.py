import random
from fractions import Fraction
from math import comb

import pytest

from coinrig.graph import Graph, complete_graph
from coinrig.linalg import (CoincidenceSpec, Realization, generic_rank,
                            generic_realization, int_rank, is_infinitesimally_rigid,
                            is_probable_prime, kernel_contains,
                            lift_contracted_realization, rank_exact, rank_modp,
                            rigid_motion_basis, rigidity_matrix, rigidity_target,
                            sample_T_coincident)


def F(x):
    return Fraction(x)


def test_single_edge_row():
    g = Graph(2, [(0, 1)])
    p = Realization(2, {0: (F(0), F(0)), 1: (F(1), F(0))})
    M = rigidity_matrix(g, p)
    assert M.shape == (1, 4)
    assert M.rows[0] == [F(-1), F(0), F(1), F(0)]
    assert rank_exact(M) == 1


def test_coincident_edge_gives_zero_row():
    g = Graph(2, [(0, 1)])
    p = Realization(2, {0: (F(2), F(3)), 1: (F(2), F(3))})
    M = rigidity_matrix(g, p)
    assert M.rows[0] == [F(0)] * 4
    assert rank_exact(M) == 0
    assert rank_modp(M) == 0


def test_triangle_rank():
    g = complete_graph(3)
    p = Realization(2, {0: (F(0), F(0)), 1: (F(1), F(0)), 2: (F(0), F(1))})
    M = rigidity_matrix(g, p)
    assert rank_exact(M) == 3
    assert rank_modp(M) == 3


def test_missing_coordinates_error():
    g = Graph(2, [(0, 1)])
    p = Realization(2, {0: (F(0), F(0))})
    with pytest.raises(ValueError, match="no coordinates"):
        rigidity_matrix(g, p)


def test_int_rank_against_fraction_gauss():
    # oracle: plain Gaussian elimination over Fractions
    def frac_rank(rows):
        m = [[Fraction(x) for x in r] for r in rows]
        rank = 0
        cols = len(m[0]) if m else 0
        for c in range(cols):
            piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            for i in range(len(m)):
                if i != rank and m[i][c]:
                    f = m[i][c] / m[rank][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
            rank += 1
        return rank

    rng = random.Random(0)
    for _ in range(60):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        mat = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        assert int_rank(mat) == frac_rank(mat)


def test_rank_modp_never_exceeds_exact():
    rng = random.Random(4)
    for seed in range(20):
        n = rng.randint(2, 6)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        g = Graph(n, rng.sample(pairs, rng.randint(1, len(pairs))))
        p = generic_realization(g, 2, seed)
        M = rigidity_matrix(g, p)
        assert rank_modp(M) <= rank_exact(M)
        assert rank_modp(M) == rank_exact(M)  # equality on all sampled instances


def test_rank_modp_rejects_composite():
    g = Graph(2, [(0, 1)])
    M = rigidity_matrix(g, generic_realization(g, 2, 0))
    with pytest.raises(ValueError, match="not prime"):
        rank_modp(M, 2 ** 61 - 2)


def test_is_probable_prime():
    assert is_probable_prime(2 ** 61 - 1)
    assert not is_probable_prime(2 ** 61 - 3)
    assert is_probable_prime(101)
    assert not is_probable_prime(1)


def test_rigidity_thresholds():
    g = Graph(2, [(0, 1)])
    p = Realization(2, {0: (F(0), F(0)), 1: (F(5), F(1))})
    assert is_infinitesimally_rigid(g, p)  # rank 1 = 2*2-3
    path = Graph(3, [(0, 1), (1, 2)])
    q = generic_realization(path, 2, 7)
    assert not is_infinitesimally_rigid(path, q)
    assert rigidity_target(1, 2) == 0  # |V| < d branch
    assert rigidity_target(9, 2) == 15


def test_sample_T_coincident():
    g = complete_graph(4)
    spec = CoincidenceSpec.of({1, 2})
    p = sample_T_coincident(g, spec, 2, 5)
    assert p.point(1) == p.point(2)
    q = sample_T_coincident(g, spec, 2, 5)
    assert p.coords == q.coords  # deterministic for a fixed seed
    r = sample_T_coincident(g, spec, 2, 6)
    assert p.coords != r.coords
    single = sample_T_coincident(g, CoincidenceSpec.of({3}), 2, 5)
    assert len({single.point(v) for v in range(4)}) == 4


def test_generic_rank_report_fields():
    K4 = complete_graph(4)
    rep = generic_rank(K4, CoincidenceSpec.of({0, 1}), 2, trials=3, seed=1)
    assert rep.rank == 5 and rep.target == 5
    assert rep.rigid and not rep.independent  # |E| = 6 > 5
    assert rep.method == "exact-rational"
    assert "Schwartz-Zippel" in rep.note
    K3 = complete_graph(3)
    rep3 = generic_rank(K3, CoincidenceSpec.of({0, 1}), 2, trials=3, seed=1)
    assert rep3.rank == 2 and not rep3.rigid


def test_rank_upper_bound_and_monotonicity():
    rng = random.Random(11)
    for seed in range(25):
        n = rng.randint(2, 7)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        m = rng.randint(1, len(pairs))
        chosen = rng.sample(pairs, m)
        g = Graph(n, chosen)
        rep = generic_rank(g, CoincidenceSpec.of({0}), 2, trials=2, seed=seed)
        assert rep.rank <= min(len(g.edges), rigidity_target(n, 2))
        if m >= 2:
            sub = Graph(n, chosen[:-1])
            sub_rep = generic_rank(sub, CoincidenceSpec.of({0}), 2, trials=2, seed=seed)
            assert sub_rep.rank <= rep.rank


def test_rigid_motions_lie_in_kernel():
    rng = random.Random(13)
    for d in (2, 3):
        for seed in range(8):
            n = rng.randint(d, 6)
            pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
            g = Graph(n, rng.sample(pairs, rng.randint(0, len(pairs))))
            p = generic_realization(g, d, seed)
            M = rigidity_matrix(g, p)
            basis = rigid_motion_basis(p, n)
            assert len(basis) == comb(d + 1, 2)
            for vec in basis:
                assert kernel_contains(M, vec)


def test_contraction_kernel_bound():
    # rank R(G,p) <= rank R(G/T, p_T) + d(|T|-1) for lifted realizations
    rng = random.Random(17)
    for seed in range(20):
        n = rng.randint(4, 7)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        g = Graph(n, rng.sample(pairs, rng.randint(1, len(pairs))))
        T = frozenset(rng.sample(range(n), rng.randint(2, 3)))
        gT = g.contract(T)
        pT = generic_realization(gT, 2, seed)
        lifted = lift_contracted_realization(g, T, pT)
        for v in T:
            assert lifted.point(v) == lifted.point(min(T))
        lhs = rank_exact(rigidity_matrix(g, lifted))
        rhs = rank_exact(rigidity_matrix(gT, pT)) + 2 * (len(T) - 1)
        assert lhs <= rhs


def test_realization_json_roundtrip():
    p = Realization(2, {0: (F(1) / 3, F(-2)), 1: (F(0), F(5) / 7)})
    q = Realization.from_json(p.to_json())
    assert q.dim == 2 and q.coords == p.coords
