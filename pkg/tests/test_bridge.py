import numpy as np
import pytest

from admseq.bridge import decomp_to_isometry, gram_matrix, isometry_to_decomp
from admseq.errors import DimensionError
from admseq.horn import horn_decompose
from admseq.operators import RankOneDecomp, frame_operator, make_term

RNG = np.random.default_rng(23)


def random_decomp(n_terms, dim):
    eye = np.eye(dim, dtype=complex)
    sources = [make_term(w, eye[:, i]) for i, w in enumerate(RNG.uniform(0.2, 1.0, size=dim))]
    eta = [t.weight for t in sources]
    m = int(RNG.integers(1, 4))
    coeffs = RNG.dirichlet(np.ones(m))
    xi = np.zeros(dim)
    for c in coeffs:
        xi += c * RNG.permutation(eta)
    xi = list(xi) + [0.0] * (n_terms - dim)
    return horn_decompose(sources, xi), frame_operator(sources, dim=dim)


def test_gram_equals_frame_operator():
    decomp, A = random_decomp(6, 4)
    rec = decomp_to_isometry(decomp)
    assert np.allclose(rec.gram, A, atol=1e-10)


def test_placement_polar_pieces_agree():
    decomp, _ = random_decomp(5, 4)
    rec = decomp_to_isometry(decomp)
    assert np.allclose(rec.isometry @ rec.sqrt_gram, rec.placement, atol=1e-9)
    VtV = rec.isometry.conj().T @ rec.isometry
    assert np.allclose(VtV, rec.range_projection, atol=1e-9)
    assert np.allclose(VtV @ VtV, VtV, atol=1e-9)


def test_diagonal_reproduces_weights():
    decomp, _ = random_decomp(6, 3)
    rec = decomp_to_isometry(decomp)
    assert np.allclose(rec.diagonal, rec.weights, atol=1e-10)


def test_zero_weight_terms_are_skipped_but_indexed():
    v = np.array([1.0, 0.0], dtype=complex)
    u = np.array([0.0, 1.0], dtype=complex)
    decomp = RankOneDecomp((make_term(0.0, v), make_term(0.5, u), make_term(0.25, v)))
    rec = decomp_to_isometry(decomp)
    assert rec.kept_indices == (1, 2)
    assert rec.weights == (0.5, 0.25)
    assert rec.placement.shape == (2, 2)


def test_round_trip_recovers_terms():
    decomp, _ = random_decomp(5, 4)
    rec = decomp_to_isometry(decomp)
    back = isometry_to_decomp(rec.isometry, rec.gram)
    kept = [decomp.terms[i] for i in rec.kept_indices]
    assert len(back.terms) == len(kept)
    for orig, rebuilt in zip(kept, back.terms):
        assert rebuilt.weight == pytest.approx(orig.weight, abs=1e-9)
        assert np.allclose(rebuilt.vector, orig.vector, atol=1e-9)


def test_round_trip_preserves_frame_operator():
    decomp, A = random_decomp(7, 5)
    rec = decomp_to_isometry(decomp)
    back = isometry_to_decomp(rec.isometry, rec.gram)
    assert np.allclose(frame_operator(back.terms, dim=5), A, atol=1e-9)


def test_isometry_range_mismatch_rejected():
    decomp, _ = random_decomp(4, 3)
    rec = decomp_to_isometry(decomp)
    bad = np.zeros_like(rec.isometry)
    with pytest.raises(ValueError):
        isometry_to_decomp(bad, rec.gram)


def test_all_zero_decomposition_rejected():
    v = np.array([1.0, 0.0], dtype=complex)
    with pytest.raises(DimensionError):
        decomp_to_isometry(RankOneDecomp((make_term(0.0, v),)))


def test_gram_matrix_spectrum_matches_frame_operator():
    decomp, A = random_decomp(6, 4)
    G = gram_matrix(decomp)
    assert G.shape == (6, 6)
    assert np.allclose(np.diag(G).real, decomp.weights(), atol=1e-12)
    eig_G = np.sort(np.linalg.eigvalsh(G))[::-1]
    eig_A = np.sort(np.linalg.eigvalsh(A))[::-1]
    assert np.allclose(eig_G[:4], eig_A, atol=1e-9)
    assert np.allclose(eig_G[4:], 0.0, atol=1e-9)
