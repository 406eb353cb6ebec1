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

"""pytest shared testing configuration.

This

* Adds a ``--ignore-slow`` flag that skips tests marked ``slow`` (large
  lattices and high order functional equations).
* Imports :mod:`numpy` and the bundled graph corpus up front, so their
  cost is not charged to the first test in ``pytest --durations=N``.
"""

import pytest


def pytest_sessionstart(session):  # pylint: disable=unused-argument
    import numpy  # noqa: F401

    from matroidkl import matroid

    matroid.bundled_graphs()


def pytest_addoption(parser):
    parser.addoption(
        "--ignore-slow",
        dest="ignore_slow",
        action="store_true",
        help="Skip the large lattice and high order solver tests.",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: large lattice or high order solver test"
    )


def pytest_collection_modifyitems(config, items):
    if not config.getoption("--ignore-slow"):
        return

    skip_slow = pytest.mark.skip(reason="--ignore-slow skips slow tests")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
