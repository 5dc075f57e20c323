"""Series embedding, hankelization and diagonal averaging.

The embedding operator maps a series of length N to its L x K trajectory
matrix (K = N - L + 1) whose antidiagonals are constant.  Diagonal averaging
is the inverse operation composed with the orthogonal projection onto Hankel
matrices; the two together convert matrix decompositions back into series
decompositions.
"""

from functools import lru_cache

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .errors import SeriesTooShort, ShapeMismatch, WindowOutOfRange

__all__ = [
    "as_series",
    "embed",
    "hankelize",
    "unembed",
    "w_weights",
    "diff_series",
    "read_series_csv",
    "write_series_csv",
]


def as_series(values) -> np.ndarray:
    """Coerce to a 1-D float array, requiring every sample to be finite."""
    x = np.asarray(values, dtype=float)
    if x.ndim != 1:
        raise ShapeMismatch(f"series must be one-dimensional, got shape {x.shape}")
    if x.size and not np.all(np.isfinite(x)):
        raise ValueError("series contains NaN or infinite samples")
    return x


def _check_window(n: int, window: int) -> None:
    if not 1 < window < n:
        raise WindowOutOfRange(
            f"window must satisfy 1 < L < N, got L={window} for N={n}"
        )


def embed(series, window: int) -> np.ndarray:
    """Build the L x K trajectory matrix whose column j is (x_j, ..., x_{j+L-1}).

    Parameters
    ----------
    series : array_like
        Input samples of length N >= 3.
    window : int
        Window length L with 1 < L < N.
    """
    x = as_series(series)
    _check_window(x.size, window)
    k = x.size - window + 1
    return sliding_window_view(x, k).copy()


@lru_cache(maxsize=128)
def _antidiagonal_layout(l: int, k: int):
    """Index matrix s[i, j] = i + j and the exact cell count per antidiagonal."""
    s = np.add.outer(np.arange(l), np.arange(k))
    counts = np.bincount(s.ravel(), minlength=l + k - 1)
    s.flags.writeable = False
    counts.flags.writeable = False
    return s, counts


def _antidiagonal_means(m: np.ndarray) -> np.ndarray:
    l, k = m.shape
    s, counts = _antidiagonal_layout(l, k)
    sums = np.bincount(s.ravel(), weights=m.ravel(), minlength=l + k - 1)
    return sums / counts


def hankelize(m) -> np.ndarray:
    """Project a matrix onto Hankel matrices by averaging each antidiagonal.

    Idempotent, and orthogonal in the Frobenius inner product.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a matrix, got shape {m.shape}")
    s, _ = _antidiagonal_layout(*m.shape)
    return _antidiagonal_means(m)[s]


def unembed(m) -> np.ndarray:
    """Average antidiagonals into a series of length L + K - 1.

    Inverse of :func:`embed` on Hankel input; hankelizes implicitly otherwise.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a matrix, got shape {m.shape}")
    return _antidiagonal_means(m)


def w_weights(n: int, window: int) -> np.ndarray:
    """Number of trajectory-matrix cells each sample occupies.

    w_n = min(n, L, K, N - n + 1) for n = 1..N (returned 0-indexed).
    """
    _check_window(n, window)
    k = n - window + 1
    idx = np.arange(1, n + 1)
    return np.minimum(np.minimum(idx, n - idx + 1), min(window, k))


def diff_series(series) -> np.ndarray:
    """Successive differences x_{n+1} - x_n; length drops by one."""
    x = as_series(series)
    if x.size < 2:
        raise SeriesTooShort(f"need at least 2 samples to difference, got {x.size}")
    return np.diff(x)


def read_series_csv(path) -> np.ndarray:
    """Read a series stored one numeric value per row.

    A single non-numeric first row is treated as a header and skipped.
    """
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ValueError(f"no data rows in {path}")
    start = 0
    try:
        float(lines[0])
    except ValueError:
        start = 1
    if start == len(lines):
        raise ValueError(f"no data rows after header in {path}")
    return as_series([float(ln) for ln in lines[start:]])


def write_series_csv(path, series, header: str | None = None) -> None:
    """Write a series one value per row, mirroring :func:`read_series_csv`."""
    x = as_series(series)
    with open(path, "w") as fh:
        if header is not None:
            fh.write(f"{header}\n")
        for v in x:
            fh.write(f"{v!r}\n")
