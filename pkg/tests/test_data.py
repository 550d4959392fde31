import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nnselect import Dataset, apply_scaler, fit_scaler, load_csv, split


def write_csv(tmp_path, text, name="data.csv"):
    path = tmp_path / name
    path.write_text(text)
    return path


class TestDataset:
    def test_rejects_ragged_shapes(self):
        with pytest.raises(ValueError):
            Dataset(np.zeros((3, 2)), np.zeros(4), ("a", "b"), "y")

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            Dataset(np.array([[np.inf]]), np.zeros(1), ("a",), "y")

    def test_rejects_response_among_covariates(self):
        with pytest.raises(ValueError):
            Dataset(np.zeros((2, 1)), np.zeros(2), ("y",), "y")


class TestLoadCsv:
    def test_well_formed(self, tmp_path):
        path = write_csv(tmp_path, "a,b,y\n1,2,3\n4,5,6\n7,8,9\n")
        data = load_csv(path, "y")
        assert data.n == 3
        assert data.covariate_names == ("a", "b")
        assert data.n_rejected == 0
        np.testing.assert_array_equal(data.y, [3, 6, 9])

    def test_bad_cell_drops_row_with_count(self, tmp_path):
        path = write_csv(tmp_path, "a,y\n1,2\noops,4\n5,6\n")
        data = load_csv(path, "y")
        assert data.n == 2
        assert data.n_rejected == 1
        np.testing.assert_array_equal(data.X[:, 0], [1, 5])

    def test_missing_cell_drops_row(self, tmp_path):
        path = write_csv(tmp_path, "a,y\n1,2\n,4\n")
        data = load_csv(path, "y")
        assert (data.n, data.n_rejected) == (1, 1)

    def test_missing_response_column(self, tmp_path):
        path = write_csv(tmp_path, "a,b\n1,2\n")
        with pytest.raises(ValueError, match="response column"):
            load_csv(path, "y")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_csv(tmp_path / "nope.csv", "y")

    def test_values_not_altered(self, tmp_path):
        path = write_csv(tmp_path, "a,y\n0.123456789012345,1\n-7e3,2\n")
        data = load_csv(path, "y")
        assert data.X[0, 0] == 0.123456789012345
        assert data.X[1, 0] == -7000.0


class TestSplit:
    def test_sizes_round_half_up(self):
        data = Dataset(np.arange(20).reshape(10, 2), np.arange(10),
                       ("a", "b"), "y")
        train, test = split(data, 0.1, seed=1)
        assert (train.n, test.n) == (9, 1)

    def test_boston_sized_split(self):
        data = Dataset(np.zeros((506, 1)) + np.arange(506)[:, None],
                       np.arange(506), ("a",), "y")
        train, test = split(data, 0.1, seed=0)
        assert (train.n, test.n) == (455, 51)

    def test_same_seed_same_partition(self):
        data = Dataset(np.arange(30)[:, None], np.arange(30), ("a",), "y")
        t1, s1 = split(data, 0.25, seed=42)
        t2, s2 = split(data, 0.25, seed=42)
        np.testing.assert_array_equal(t1.X, t2.X)
        np.testing.assert_array_equal(s1.X, s2.X)

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(4, 200), frac=st.floats(0.05, 0.9),
           seed=st.integers(0, 2**32 - 1))
    def test_partition_properties(self, n, frac, seed):
        n_test = int(np.floor(frac * n + 0.5))
        if n_test == 0 or n_test == n:
            return
        data = Dataset(np.arange(n)[:, None], np.arange(n), ("a",), "y")
        train, test = split(data, frac, seed)
        assert test.n == n_test and train.n == n - n_test
        merged = np.sort(np.concatenate([train.y, test.y]))
        np.testing.assert_array_equal(merged, np.arange(n))  # disjoint cover

    def test_empty_part_rejected(self):
        data = Dataset(np.arange(4)[:, None], np.arange(4), ("a",), "y")
        with pytest.raises(ValueError):
            split(data, 0.01, seed=0)


class TestScaler:
    def test_min_max_mapping(self):
        data = Dataset(np.array([[0.0], [5.0], [10.0]]),
                       np.array([1.0, 2.0, 3.0]), ("a",), "y")
        scaled = apply_scaler(fit_scaler(data), data)
        np.testing.assert_allclose(scaled.X[:, 0], [0.0, 0.5, 1.0])
        np.testing.assert_allclose(scaled.y, [0.0, 0.5, 1.0])

    def test_training_values_span_unit_interval(self, rng):
        X = rng.normal(10, 5, size=(40, 3))
        y = rng.normal(-3, 2, size=40)
        data = Dataset(X, y, ("a", "b", "c"), "y")
        scaled = apply_scaler(fit_scaler(data), data)
        assert scaled.X.min() >= 0.0 and scaled.X.max() <= 1.0
        np.testing.assert_allclose(scaled.X.min(axis=0), 0.0, atol=1e-15)
        np.testing.assert_allclose(scaled.X.max(axis=0), 1.0, rtol=1e-15)

    def test_out_of_range_values_not_clipped(self):
        train = Dataset(np.array([[0.0], [10.0]]), np.array([0.0, 1.0]),
                        ("a",), "y")
        scaler = fit_scaler(train)
        other = Dataset(np.array([[12.0]]), np.array([0.5]), ("a",), "y")
        assert apply_scaler(scaler, other).X[0, 0] == pytest.approx(1.2)

    def test_round_trip(self, rng):
        X = rng.uniform(-5, 20, size=(30, 2))
        y = rng.uniform(100, 200, size=30)
        data = Dataset(X, y, ("a", "b"), "y")
        scaler = fit_scaler(data)
        back = scaler.inverse(scaler.transform(data))
        np.testing.assert_allclose(back.X, data.X, rtol=1e-12)
        np.testing.assert_allclose(back.y, data.y, rtol=1e-12)

    def test_constant_column_rejected(self):
        data = Dataset(np.array([[1.0, 2.0], [1.0, 3.0]]),
                       np.array([0.0, 1.0]), ("a", "b"), "y")
        with pytest.raises(ValueError, match="constant"):
            fit_scaler(data)

    def test_constant_response_rejected(self):
        data = Dataset(np.array([[1.0], [2.0]]), np.array([5.0, 5.0]),
                       ("a",), "y")
        with pytest.raises(ValueError, match="constant"):
            fit_scaler(data)
