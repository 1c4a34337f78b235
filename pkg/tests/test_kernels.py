import numpy as np
import pytest

from beliefmerge import _kernels


def _random_case(seed, n_cands, n_targets, bits=24):
    rng = np.random.default_rng(seed)
    cands = rng.integers(0, 1 << bits, n_cands).astype(np.int64)
    targets = rng.integers(0, 1 << bits, n_targets).astype(np.int64)
    return cands, targets


def _tables(bits=24):
    identity = np.arange(bits + 1, dtype=np.int64)
    drastic = (identity > 0).astype(np.int64)
    bumpy = np.array([0] + [((h * 7) % 5) + 1 for h in range(1, bits + 1)], dtype=np.int64)
    return identity, drastic, bumpy


def _reference(cands, targets, table):
    return np.array(
        [min(table[int(c ^ t).bit_count()] for t in targets) for c in cands],
        dtype=np.int64,
    )


class TestNumpyKernel:
    @pytest.mark.parametrize("seed", range(3))
    def test_matches_bit_count_reference(self, seed):
        cands, targets = _random_case(seed, 100, 37)
        for table in _tables():
            got = _kernels._min_mapped_numpy(cands, targets, table)
            assert np.array_equal(got, _reference(cands, targets, table))

    def test_chunked_path(self):
        cands, targets = _random_case(7, _kernels._CHUNK * 2 + 5, 8)
        table = _tables()[0]
        got = _kernels._min_mapped_numpy(cands, targets, table)
        assert np.array_equal(got, _reference(cands, targets, table))


@pytest.mark.skipif(_kernels._min_mapped_numba is None, reason="numba unavailable")
class TestNumbaKernel:
    @pytest.mark.parametrize("seed", range(3))
    def test_agrees_with_numpy_backend(self, seed):
        cands, targets = _random_case(seed + 50, 500, 61)
        for table in _tables():
            a = _kernels._min_mapped_numba(cands, targets, table)
            b = _kernels._min_mapped_numpy(cands, targets, table)
            assert np.array_equal(a, b)

    def test_single_candidate_and_target(self):
        cands = np.array([0b1011], dtype=np.int64)
        targets = np.array([0b0001], dtype=np.int64)
        table = _tables()[0]
        assert _kernels._min_mapped_numba(cands, targets, table)[0] == 2


class TestDispatch:
    def test_backend_is_resolved(self):
        assert _kernels.backend() in ("numba", "numpy")

    def test_empty_targets_rejected(self):
        with pytest.raises(ValueError):
            _kernels.min_mapped_distance(
                np.array([1], dtype=np.int64),
                np.array([], dtype=np.int64),
                np.array([0, 1], dtype=np.int64),
            )

    def test_accepts_plain_lists_via_cast(self):
        got = _kernels.min_mapped_distance(
            np.array([0b11, 0b00], dtype=np.int64),
            np.array([0b00], dtype=np.int64),
            np.arange(3, dtype=np.int64),
        )
        assert got.tolist() == [2, 0]
