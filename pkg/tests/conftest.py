import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings

from evoweights import column_means, normalize
from evoweights.io import load_office

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# Rounded values printed alongside the office example.
OFFICE_MEANS = (0.5106, 0.5142, 0.3931, 0.1333)
OFFICE_EQUILIBRIUM = (0.2117, 0.2109, 0.2395, 0.3378)
OFFICE_TRAJECTORY = np.array([
    [0.2500, 0.2500, 0.2500, 0.2500],
    [0.2421, 0.2419, 0.2497, 0.2664],
    [0.2358, 0.2354, 0.2487, 0.2802],
    [0.2307, 0.2302, 0.2475, 0.2917],
    [0.2266, 0.2261, 0.2462, 0.3011],
    [0.2234, 0.2228, 0.2450, 0.3088],
    [0.2209, 0.2202, 0.2440, 0.3149],
    [0.2189, 0.2182, 0.2431, 0.3198],
    [0.2173, 0.2166, 0.2424, 0.3237],
    [0.2161, 0.2154, 0.2418, 0.3267],
    [0.2151, 0.2144, 0.2413, 0.3291],
])
# (score, raw row) per rank; rows are identified by (rent, size, rooms, balcony).
OFFICE_RANKING_UNIFORM = [
    (0.755979, (7933, 383, 14.5, 1)), (0.596097, (5979, 252, 6, 1)),
    (0.433915, (7413, 460, 7, 0)), (0.397865, (5644, 329, 6, 0)),
    (0.357897, (1650, 133, 3, 0)), (0.356680, (5016, 219, 6, 0)),
    (0.351331, (1106, 123, 2, 0)), (0.345613, (2647, 133, 4, 0)),
    (0.339790, (7912, 314, 7, 0)), (0.335508, (8442, 335, 7, 0)),
    (0.333501, (4409, 175, 5, 0)), (0.328854, (3218, 165, 3, 0)),
    (0.317420, (7708, 230, 8, 0)), (0.285828, (5143, 159, 4, 0)),
    (0.280716, (4348, 138, 3, 0)),
]
OFFICE_RANKING_EQUILIBRIUM = [
    (0.793484, (7933, 383, 14.5, 1)), (0.641988, (5979, 252, 6, 1)),
    (0.380130, (7413, 460, 7, 0)), (0.347898, (5644, 329, 6, 0)),
    (0.313203, (5016, 219, 6, 0)), (0.308616, (1650, 133, 3, 0)),
    (0.301152, (1106, 123, 2, 0)), (0.300664, (7912, 314, 7, 0)),
    (0.300134, (2647, 133, 4, 0)), (0.297003, (8442, 335, 7, 0)),
    (0.291728, (4409, 175, 5, 0)), (0.283968, (3218, 165, 3, 0)),
    (0.283780, (7708, 230, 8, 0)), (0.249463, (5143, 159, 4, 0)),
    (0.243249, (4348, 138, 3, 0)),
]
XI_TABLE = [
    (0.0, 0.375, 0.625), (0.1, 0.350, 0.650), (0.2, 0.325, 0.675),
    (0.3, 0.300, 0.700), (0.4, 0.275, 0.725), (0.5, 0.250, 0.750),
]
KARLSPLATZ = 11
FAVORITENSTRASSE = 4


def x_xi(xi):
    return np.array([[1.0, 0.0], [0.5 + xi, 0.5 - xi]])


@pytest.fixture(scope="session")
def office():
    data, spec = load_office()
    phi = normalize(data, spec)
    return data, spec, phi, column_means(phi)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
