"""Resolutions, Ext and Tor over monomial Artinian algebras.

Three independent oracles cross-check the dimension-shift engine:

 * commuting_hom_dim  -- Hom as the solution space of the linear system
   "f commutes with every basis monomial action" on concrete realizations;
 * hom_complex_ext    -- cohomology of the materialized Hom complex;
 * tensor_complex_tor -- homology of the materialized tensor complex.

All three go through _act_matrix/rank only, never through the syzygy or
component-splitting code paths they are checking.
"""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sackit import (
    NumericalSemigroup,
    cyclic_quotient,
    direct_sum,
    ext_deg_window,
    ext_dims,
    free_module,
    is_free,
    minimal_resolution,
    module_from_presentation,
    quotient_algebra,
    realization,
    residue_field,
    syzygy_step,
    tor_dims,
    truncation_algebra,
    SemigroupIdeal,
)
from sackit.artinian import ExtWindowReport, _act_matrix, apply_columns
from sackit.errors import (
    AlgebraMismatch,
    DomainError,
    NonMinimalInput,
    NonPositive,
    ShapeMismatch,
)
from sackit.modp import rank


def trunc(gens, q, char=None):
    return truncation_algebra(NumericalSemigroup.from_generators(gens), q, char)


def flatten_map(algebra, nrows, cols):
    """The k-matrix of the free-module map with the given columns."""
    n = algebra.dim
    rows = [[0] * (len(cols) * n) for _ in range(nrows * n)]
    for j, col in enumerate(cols):
        for g, entry in enumerate(col):
            for b, d in enumerate(algebra.degrees):
                prod = algebra.mul(entry, algebra.monomial(d))
                for a in range(n):
                    rows[g * n + a][j * n + b] = prod[a]
    return rows


def commuting_hom_dim(M, N):
    rm, rn = realization(M), realization(N)
    p = M.algebra.char
    dm, dn = rm.dim, rn.dim
    if dm == 0 or dn == 0:
        return 0
    rows = []
    for b in range(M.algebra.dim):
        Am, An = rm.action[b], rn.action[b]
        for i in range(dn):
            for j in range(dm):
                row = [0] * (dn * dm)
                for t in range(dm):
                    row[i * dm + t] = (row[i * dm + t] + Am[t][j]) % p
                for t in range(dn):
                    row[t * dm + j] = (row[t * dm + j] - An[i][t]) % p
                rows.append(row)
    return dn * dm - rank(rows, p)


def hom_complex_ext(M, N, upto):
    res = minimal_resolution(M, upto + 1)
    realN = realization(N)
    n = realN.dim
    p = M.algebra.char
    deltas = []
    for i in range(upto + 1):
        cols = res.matrices[i]  # d_{i+1}: F_{i+1} -> F_i
        src = res.betti[i] * n
        rows = [[0] * src for _ in range(res.betti[i + 1] * n)]
        for j, col in enumerate(cols):
            for g, entry in enumerate(col):
                blk = _act_matrix(realN, entry, p)
                for a in range(n):
                    for b in range(n):
                        rows[j * n + a][g * n + b] = blk[a][b]
        deltas.append(rows)
    dims, prev = [], 0
    for i in range(upto + 1):
        rk = rank(deltas[i], p)
        dims.append(res.betti[i] * n - rk - prev)
        prev = rk
    return tuple(dims)


def tensor_complex_tor(M, N, upto):
    res = minimal_resolution(M, upto + 1)
    realN = realization(N)
    n = realN.dim
    p = M.algebra.char
    ranks = []
    for i in range(upto + 1):
        cols = res.matrices[i]
        rows = [[0] * (res.betti[i + 1] * n) for _ in range(res.betti[i] * n)]
        for j, col in enumerate(cols):
            for g, entry in enumerate(col):
                blk = _act_matrix(realN, entry, p)
                for a in range(n):
                    for b in range(n):
                        rows[g * n + a][j * n + b] = blk[a][b]
        ranks.append(rank(rows, p))
    dims = [res.betti[0] * n - ranks[0]]
    for i in range(1, upto + 1):
        dims.append(res.betti[i] * n - ranks[i - 1] - ranks[i])
    return tuple(dims)


def test_algebra_structure_frozen():
    A = trunc([3, 4, 5], 3)
    assert A.descriptor() == "H=3,4,5; q=3; p=32003"
    assert A.degrees == (0, 4, 5)
    assert A.dim == 3
    assert A.embedding_dim() == 2
    assert A.radical_index() == 2
    B = trunc([4, 5, 6], 4)
    assert B.degrees == (0, 5, 6, 11)
    assert B.radical_index() == 3  # 5 + 6 = 11 survives the truncation
    assert B.embedding_dim() == 2
    C = trunc([3, 4], 3)
    assert C.degrees == (0, 4, 8)
    assert C.radical_index() == 3
    assert C.embedding_dim() == 1


def test_algebra_multiplication():
    B = trunc([4, 5, 6], 4)
    x5, x6 = B.monomial(5), B.monomial(6)
    assert B.mul(x5, x6) == B.monomial(11)
    assert B.mul(x5, x5) == B.zero()  # 10 is cut off by the truncation
    one = B.monomial(0)
    assert B.mul(one, x6) == x6
    assert B.is_unit(one) and not B.is_unit(x5)
    # (1 + x5) * (1 - x5) = 1 since x5^2 = 0
    u = tuple((a + b) % B.char for a, b in zip(one, x5))
    assert B.mul(u, B.invert(u)) == one
    with pytest.raises(DomainError):
        B.invert(x5)
    assert B.monomial(7) == B.zero()  # 7 is not in the semigroup


def test_quotient_algebra_by_nonprincipal_ideal():
    H = NumericalSemigroup.from_generators([5, 6, 9])
    E = SemigroupIdeal.from_generators(H, [6, 9])
    Q = quotient_algebra(E)
    assert Q.degrees == (0, 5, 10)
    assert Q.embedding_dim() == 1  # 10 = 5 + 5 is a product
    assert Q.radical_index() == 3


def test_residue_field_betti_doubling():
    A = trunc([3, 4, 5], 3)  # radical square zero, embedding dimension 2
    k = residue_field(A)
    assert minimal_resolution(k, 6).betti == (1, 2, 4, 8, 16, 32, 64)
    assert ext_dims(k, k, 6) == (1, 2, 4, 8, 16, 32, 64)
    assert tor_dims(k, k, 6) == (1, 2, 4, 8, 16, 32, 64)


def test_chain_algebra_betti_constant():
    N5 = trunc([1], 5)  # k[t]/(t^5)
    k = residue_field(N5)
    assert minimal_resolution(k, 6).betti == (1,) * 7
    assert ext_dims(k, k, 12) == (1,) * 13
    assert tor_dims(k, k, 12) == (1,) * 13


SAMPLE_MODULES = []


def _samples():
    if SAMPLE_MODULES:
        return SAMPLE_MODULES
    A = trunc([4, 5, 6], 4)
    B = trunc([3, 4, 5], 3)
    SAMPLE_MODULES.extend([
        residue_field(A),
        cyclic_quotient(A, 5),
        cyclic_quotient(A, 11),
        direct_sum(cyclic_quotient(A, 6), residue_field(A)),
        residue_field(B),
        cyclic_quotient(B, 4),
        direct_sum(cyclic_quotient(B, 5), free_module(B, 1)),
    ])
    return SAMPLE_MODULES


@pytest.mark.parametrize("idx", range(7))
def test_resolution_is_a_minimal_exact_complex(idx):
    M = _samples()[idx]
    A = M.algebra
    res = minimal_resolution(M, 4)
    betti = res.betti
    # consecutive maps compose to zero
    for d_next, d_here in zip(res.matrices[1:], res.matrices):
        for col in d_next:
            image = apply_columns(A, d_here, col)
            assert all(all(x == 0 for x in e) for e in image)
    # minimality: no unit entries anywhere
    for mat in res.matrices:
        for col in mat:
            for entry in col:
                assert not A.is_unit(entry)
    # rank-nullity bookkeeping and exactness at every inner step
    flats = [
        flatten_map(A, betti[i], res.matrices[i])
        for i in range(len(res.matrices))
    ]
    ranks = [rank(f, A.char) for f in flats]
    for i in range(len(flats)):
        ncols = betti[i + 1] * A.dim
        nullity = ncols - ranks[i]
        assert ranks[i] + nullity == ncols
        if i + 1 < len(flats):
            # ker(d_{i+1}) = im(d_{i+2}) as k-spaces
            assert nullity == ranks[i + 1], (idx, i)


@pytest.mark.parametrize("idx", range(7))
def test_ext0_matches_commuting_map_count(idx):
    M = _samples()[idx]
    A = M.algebra
    for N in (residue_field(A), cyclic_quotient(A, A.degrees[1]), M):
        assert ext_dims(M, N, 0)[0] == commuting_hom_dim(M, N), idx


def test_ext_matches_hom_complex_oracle():
    A = trunc([4, 5, 6], 4)
    B = trunc([3, 4, 5], 3)
    pairs = [
        (residue_field(A), cyclic_quotient(A, 5)),
        (cyclic_quotient(A, 5), cyclic_quotient(A, 6)),
        (cyclic_quotient(A, 11), residue_field(A)),
        (residue_field(B), cyclic_quotient(B, 4)),
        (direct_sum(cyclic_quotient(B, 5), residue_field(B)), residue_field(B)),
    ]
    for M, N in pairs:
        assert ext_dims(M, N, 5) == hom_complex_ext(M, N, 5)


def test_tor_matches_tensor_complex_oracle():
    A = trunc([4, 5, 6], 4)
    B = trunc([3, 4, 5], 3)
    pairs = [
        (residue_field(A), cyclic_quotient(A, 5)),
        (cyclic_quotient(A, 5), cyclic_quotient(A, 6)),
        (residue_field(B), cyclic_quotient(B, 4)),
    ]
    for M, N in pairs:
        assert tor_dims(M, N, 5) == tensor_complex_tor(M, N, 5)
        # Tor is symmetric in its arguments
        assert tor_dims(M, N, 5) == tor_dims(N, M, 5)


def test_free_modules_are_homologically_trivial():
    A = trunc([4, 5, 6], 4)
    F = free_module(A, 2)
    N = cyclic_quotient(A, 5)
    assert is_free(F)
    assert minimal_resolution(F, 4).betti == (2, 0, 0, 0, 0)
    assert ext_dims(F, N, 6) == (2 * N.dimension(), 0, 0, 0, 0, 0, 0)
    assert tor_dims(F, N, 6) == (2 * N.dimension(), 0, 0, 0, 0, 0, 0)
    assert ext_dims(N, F, 3)[0] == commuting_hom_dim(N, F)


def test_direct_sum_additivity():
    A = trunc([4, 5, 6], 4)
    M, N = cyclic_quotient(A, 5), residue_field(A)
    S = direct_sum(M, N)
    assert S.dimension() == M.dimension() + N.dimension()
    bM = minimal_resolution(M, 4).betti
    bN = minimal_resolution(N, 4).betti
    assert minimal_resolution(S, 4).betti == tuple(
        a + b for a, b in zip(bM, bN)
    )
    T = residue_field(A)
    assert ext_dims(S, T, 4) == tuple(
        a + b for a, b in zip(ext_dims(M, T, 4), ext_dims(N, T, 4))
    )
    with pytest.raises(AlgebraMismatch):
        direct_sum(M, residue_field(trunc([3, 4, 5], 3)))


def test_characteristic_independence():
    for char in (2, 3, 32003):
        A = trunc([4, 5, 6], 4, char=char)
        k = residue_field(A)
        M = cyclic_quotient(A, 5)
        assert minimal_resolution(k, 5).betti == (1, 2, 3, 4, 5, 6)
        assert ext_dims(M, k, 5) == ext_dims(
            cyclic_quotient(trunc([4, 5, 6], 4), 5),
            residue_field(trunc([4, 5, 6], 4)),
            5,
        )
        assert A.char == char


def test_realization_dimensions():
    B = trunc([4, 5, 6], 4)
    assert realization(cyclic_quotient(B, 5)).dim == 2  # basis classes 0, 6
    assert realization(cyclic_quotient(B, 11)).dim == 3
    assert realization(residue_field(B)).dim == 1
    assert realization(free_module(B, 3)).dim == 3 * B.dim
    r = realization(residue_field(B))
    # every positive-degree monomial kills the residue field
    for b in range(1, B.dim):
        assert r.action[b] == ((0,),)


def test_cyclic_quotient_edges():
    B = trunc([4, 5, 6], 4)
    unitq = cyclic_quotient(B, 0)
    assert unitq.dimension() == 0  # quotient by a unit collapses
    ghost = cyclic_quotient(B, 7)  # 7 is not in the semigroup: t^7 = 0
    assert is_free(ghost) and ghost.dimension() == B.dim


def test_presentation_minimalization():
    B = trunc([4, 5, 6], 4)
    one, x5 = B.monomial(0), B.monomial(5)
    # a unit entry makes the generator redundant
    M = module_from_presentation(B, 2, [(one, x5)])
    assert M.rank0 == 1
    # duplicate columns collapse to one
    M2 = module_from_presentation(B, 1, [(x5,), (x5,)])
    assert len(M2.relations) == 1
    # zero columns are dropped
    M3 = module_from_presentation(B, 1, [(B.zero(),)])
    assert is_free(M3)


def test_syzygy_step_rejects_nonminimal_input():
    B = trunc([4, 5, 6], 4)
    x5 = B.monomial(5)
    with pytest.raises(ShapeMismatch):
        syzygy_step(B, ())
    with pytest.raises(NonMinimalInput):
        syzygy_step(B, ((B.zero(),),))
    with pytest.raises(NonMinimalInput):
        syzygy_step(B, ((B.monomial(0),),))
    with pytest.raises(ShapeMismatch):
        syzygy_step(B, ((x5,), (x5, x5)))


def test_window_reports():
    B = trunc([4, 5, 6], 4)
    rep = ext_deg_window(residue_field(B), 12)
    assert rep == ExtWindowReport(12, True)
    assert rep.to_json_dict() == {
        "last_nonzero_in_window": 12,
        "nonzero_at_boundary": True,
    }
    free_rep = ext_deg_window(free_module(B, 2), 12)
    assert free_rep == ExtWindowReport(None, False)
    assert free_rep.to_json_dict() == {
        "last_nonzero_in_window": "none",
        "nonzero_at_boundary": False,
    }
    for rep2 in (rep, free_rep):
        assert ExtWindowReport.from_json_dict(rep2.to_json_dict()) == rep2
    with pytest.raises(NonPositive):
        ext_deg_window(residue_field(B), 0)
    with pytest.raises(NonPositive):
        minimal_resolution(residue_field(B), 0)


coeff = st.integers(0, 2)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_random_presentations_resolve_minimally(data):
    A = trunc([3, 4, 5], 3)
    rank0 = data.draw(st.integers(1, 2))
    ncols = data.draw(st.integers(0, 2))
    cols = []
    for _ in range(ncols):
        col = []
        for _ in range(rank0):
            col.append(tuple(data.draw(coeff) for _ in range(A.dim)))
        cols.append(tuple(col))
    M = module_from_presentation(A, rank0, cols)
    res = minimal_resolution(M, 3)
    for d_next, d_here in zip(res.matrices[1:], res.matrices):
        for col in d_next:
            image = apply_columns(A, d_here, col)
            assert all(all(x == 0 for x in e) for e in image)
    for mat in res.matrices:
        for col in mat:
            assert not any(A.is_unit(entry) for entry in col)
    assert ext_dims(M, residue_field(A), 0)[0] == commuting_hom_dim(
        M, residue_field(A)
    )
