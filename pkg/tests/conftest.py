import numpy as np
import pytest
from hypothesis import strategies as st

from fsbounds.kernels import Kernel
from fsbounds.psi_map import ClassSpec
from fsbounds.targets import custom, janowski

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def starlike():
    return ClassSpec(0.0, Kernel.identity(), janowski(1, -1))


@pytest.fixture
def convex():
    return ClassSpec(1.0, Kernel.identity(), janowski(1, -1))


def random_kernel(rng: np.random.Generator) -> Kernel:
    fam = rng.integers(6)
    if fam == 0:
        return Kernel.identity()
    if fam == 1:
        return Kernel.ruscheweyh(int(rng.integers(0, 5)))
    if fam == 2:
        return Kernel.salagean(int(rng.integers(0, 4)))
    if fam == 3:
        return Kernel.owa_srivastava(float(rng.uniform(-2, 0.95)))
    if fam == 4:
        return Kernel.multiplier(int(rng.integers(0, 4)), float(rng.uniform(-0.9, 3)))
    return Kernel.dziok_srivastava(list(rng.uniform(0.2, 3, 2)), list(rng.uniform(0.2, 3, 1)))


def random_target(rng: np.random.Generator):
    if rng.uniform() < 0.5:
        D = float(rng.uniform(-1, 0.9))
        C = float(rng.uniform(D + 0.05, 1))
        return janowski(C, D)
    return custom(float(rng.uniform(0.1, 3)), float(rng.uniform(-3, 3)))


def random_spec(rng: np.random.Generator) -> ClassSpec:
    return ClassSpec(float(rng.uniform(0, 3)), random_kernel(rng), random_target(rng))


kernels = st.one_of(
    st.just(Kernel.identity()),
    st.integers(0, 4).map(Kernel.ruscheweyh),
    st.integers(0, 3).map(Kernel.salagean),
    st.floats(-2, 0.95).map(Kernel.owa_srivastava),
    st.builds(Kernel.multiplier, st.integers(0, 3), st.floats(-0.9, 3)),
)

janowski_targets = st.floats(-1, 0.9).flatmap(
    lambda D: st.floats(D + 0.05, 1).map(lambda C: janowski(C, D))
)
targets = st.one_of(
    janowski_targets,
    st.builds(custom, st.floats(0.1, 3), st.floats(-3, 3)),
)

specs = st.builds(ClassSpec, st.floats(0, 3), kernels, targets)
