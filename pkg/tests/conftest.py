from pathlib import Path

import numpy as np
import pytest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def wine_path() -> Path:
    return DATA_DIR / "wine.csv"


def sphere_sample(n: int, d: int, seed: int) -> np.ndarray:
    """n points uniform on S^{d-1}: normalised Gaussian rows."""
    u = np.random.default_rng(seed).standard_normal((n, d))
    return u / np.linalg.norm(u, axis=1, keepdims=True)
