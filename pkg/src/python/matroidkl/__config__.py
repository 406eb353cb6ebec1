# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runtime configuration for ``matroidkl``.

Resource caps are read from environment variables every time
:func:`limits` is called, so tests (and long running sweeps) can adjust
them without re-importing the package.

* ``MATROIDKL_MAX_FLATS``: cap on the number of enumerated flats.
* ``MATROIDKL_MAX_GROUND``: cap on ground set size (at most 64).
* ``MATROIDKL_SYMFUNC_DEGREE_CAP``: cap on symmetric function degree.
* ``MATROIDKL_REFINE_BUDGET``: refinement steps allowed per root isolation.
* ``MATROIDKL_LOG_LEVEL``: default level for the command line logger.
"""

import logging
import os
import typing


MAX_FLATS_ENV = "MATROIDKL_MAX_FLATS"
MAX_GROUND_ENV = "MATROIDKL_MAX_GROUND"
DEGREE_CAP_ENV = "MATROIDKL_SYMFUNC_DEGREE_CAP"
REFINE_BUDGET_ENV = "MATROIDKL_REFINE_BUDGET"
LOG_LEVEL_ENV = "MATROIDKL_LOG_LEVEL"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Limits(typing.NamedTuple):
    """Resource caps in effect."""

    max_flats: int = 1_000_000
    max_ground: int = 64
    symfunc_degree_cap: int = 14
    refine_budget: int = 4096


def _read_positive(name, default, ceiling=None):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer", raw) from None
    if value < 1:
        raise ValueError(f"{name} must be positive", value)
    if ceiling is not None and value > ceiling:
        raise ValueError(f"{name} must be at most {ceiling}", value)
    return value


def limits():
    """Read the resource caps from the environment.

    Returns:
        Limits: The caps, falling back to defaults for unset variables.

    Raises:
        ValueError: If a variable is set to a non-integer or out of range
            value.
    """
    defaults = Limits()
    return Limits(
        max_flats=_read_positive(MAX_FLATS_ENV, defaults.max_flats),
        max_ground=_read_positive(MAX_GROUND_ENV, defaults.max_ground, 64),
        symfunc_degree_cap=_read_positive(
            DEGREE_CAP_ENV, defaults.symfunc_degree_cap
        ),
        refine_budget=_read_positive(
            REFINE_BUDGET_ENV, defaults.refine_budget
        ),
    )


def log_level(verbosity=0):
    """Pick a logging level for the command line.

    Args:
        verbosity (int): Count of ``--verbose`` flags. One selects
            ``INFO``, two or more ``DEBUG``. Zero defers to
            ``MATROIDKL_LOG_LEVEL`` (default ``WARNING``).

    Returns:
        int: A :mod:`logging` level.

    Raises:
        ValueError: If the environment names an unknown level.
    """
    if verbosity >= 2:
        return logging.DEBUG
    if verbosity == 1:
        return logging.INFO
    name = os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ValueError(f"{LOG_LEVEL_ENV} is not a logging level", name)
    return level


def configure_logging(verbosity=0, stream=None):
    """Install a root handler for command line use.

    Library modules only create loggers; handlers are added here.
    """
    logging.basicConfig(
        level=log_level(verbosity), format=LOG_FORMAT, stream=stream
    )
