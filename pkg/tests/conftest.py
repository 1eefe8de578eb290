from pathlib import Path

import numpy as np
import pytest

import cvgauss as cg

FIXTURES = Path(__file__).parent / "fixtures"


def fx(name):
    """Path of a file in tests/fixtures, as a string."""
    return str(FIXTURES / name)


def random_op(rng, n, max_r=0.8, depth=None):
    """Random composition of embedded factory gates on ``n`` modes."""
    depth = 3 * n if depth is None else depth
    op = cg.SymplecticOp(np.eye(2 * n), np.zeros(2 * n))
    for _ in range(depth):
        kind = rng.integers(5 if n > 1 else 3)
        if kind == 0:
            g = cg.embed(cg.phase_shift(rng.uniform(0, 2 * np.pi)), [int(rng.integers(n))], n)
        elif kind == 1:
            g = cg.embed(cg.squeeze(rng.uniform(0, max_r), rng.uniform(0, 2 * np.pi)), [int(rng.integers(n))], n)
        elif kind == 2:
            g = cg.embed(cg.displacement([complex(*rng.normal(size=2))]), [int(rng.integers(n))], n)
        elif kind == 3:
            pair = [int(k) for k in rng.choice(n, 2, replace=False)]
            g = cg.embed(cg.beamsplitter(rng.uniform()), pair, n)
        else:
            pair = [int(k) for k in rng.choice(n, 2, replace=False)]
            g = cg.embed(cg.two_mode_squeeze(rng.uniform(0, max_r / 2), rng.uniform(0, 2 * np.pi)), pair, n)
        op = op.then(g)
    return op


def random_state(rng, n, pure=False, max_r=0.8, max_nbar=2.0):
    """Random physical state: product of thermal (or vacuum) modes pushed through random gates."""
    if pure:
        s = cg.vacuum(n)
    else:
        s = cg.tensor(*[cg.thermal(rng.uniform(0.05, max_nbar)) for _ in range(n)])
    return cg.apply(s, random_op(rng, n, max_r=max_r))


def condition_mvn(mean, cov, L, value):
    """Condition N(mean, cov) on ``L @ r == value`` over all coordinates.

    Returns full-dimensional conditional moments; callers slice out the
    coordinates of the unmeasured modes.
    """
    L = np.asarray(L, dtype=float)
    s_rl = cov @ L
    s_ll = L @ cov @ L
    gain = s_rl / s_ll
    return mean + gain * (value - L @ mean), cov - np.outer(gain, s_rl)


def grid_integral(f, centers, halfwidths, points=401):
    """Rectangle rule for a function of (x, p) on a box."""
    xs = np.linspace(centers[0] - halfwidths[0], centers[0] + halfwidths[0], points)
    ps = np.linspace(centers[1] - halfwidths[1], centers[1] + halfwidths[1], points)
    X, P = np.meshgrid(xs, ps, indexing="ij")
    vals = f(np.stack([X, P], axis=-1))
    return vals.sum() * (xs[1] - xs[0]) * (ps[1] - ps[0])


def fourier_wigner(state, r, points=401, width=8.0):
    """Single-mode W at points ``r`` (shape (m, 2)) by numerically inverting chi.

    W(r) = (2 pi)^-2 int exp(-i r^T Omega s) chi(s) ds on a ``points``^2 grid
    spanning ``width`` standard deviations of |chi| along each axis.
    """
    Om = cg.omega(1)
    half = width * np.sqrt(np.diag(Om.T @ np.linalg.inv(state.cov) @ Om))
    s1 = np.linspace(-half[0], half[0], points)
    s2 = np.linspace(-half[1], half[1], points)
    S1, S2 = np.meshgrid(s1, s2, indexing="ij")
    chi = cg.characteristic(state, np.stack([S1, S2], axis=-1))
    a = np.asarray(r, dtype=float) @ Om  # r^T Omega s = a . s
    e1 = np.exp(-1j * np.outer(a[:, 0], s1))
    e2 = np.exp(-1j * np.outer(a[:, 1], s2))
    vals = np.einsum("mi,ij,mj->m", e1, chi, e2)
    return (vals * (s1[1] - s1[0]) * (s2[1] - s2[0]) / (2 * np.pi) ** 2).real


#: PASS/FAIL lines recorded by the acceptance suite, repeated in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
