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

"""Setup file for ``matroidkl``."""

import os
import sys

import setuptools


VERSION = "2026.10.0.dev1"  # Also in ``codemeta.json`` and ``__init__.py``.
AUTHOR = "matroidkl developers"  # Also in ``__init__.py``.
README_FILENAME = os.path.join(os.path.dirname(__file__), "README.rst")
IGNORE_VERSION_CHECK_ENV = "MATROIDKL_IGNORE_VERSION_CHECK"
INVALID_VERSION_MESSAGE = """\
The current Python version ({major}.{minor}) is not supported.

The supported versions are: {versions}

Using `matroidkl` on an unsupported version of Python is not known to
work. To disable this check, set the `MATROIDKL_IGNORE_VERSION_CHECK`
environment variable.
"""
REQUIREMENTS = ("numpy >= 1.24.2", "sympy >= 1.11.1")
DESCRIPTION = "Exact Kazhdan-Lusztig polynomials of matroids"


def make_readme():
    with open(README_FILENAME, "r") as file_obj:
        return file_obj.read()


def setup():
    setuptools.setup(
        name="matroidkl",
        version=VERSION,
        description=DESCRIPTION,
        author=AUTHOR,
        long_description=make_readme(),
        scripts=(),
        keywords=[
            "Matroid",
            "Kazhdan-Lusztig",
            "Combinatorics",
            "Symmetric functions",
            "Python",
        ],
        packages=["matroidkl", "matroidkl.hazmat"],
        package_dir={"": os.path.join("src", "python")},
        license="Apache 2.0",
        platforms="Posix; macOS; Windows",
        package_data={"matroidkl": [os.path.join("data", "*.txt")]},
        zip_safe=True,
        install_requires=REQUIREMENTS,
        entry_points={
            "console_scripts": ["matroidkl = matroidkl.cli:main"],
        },
        python_requires=">=3.8",
        classifiers=[
            "Development Status :: 4 - Beta",
            "Intended Audience :: Science/Research",
            "Topic :: Scientific/Engineering :: Mathematics",
            "License :: OSI Approved :: Apache Software License",
            "Operating System :: OS Independent",
            "Programming Language :: Python :: 3",
            "Programming Language :: Python :: 3.8",
            "Programming Language :: Python :: 3.9",
            "Programming Language :: Python :: 3.10",
            "Programming Language :: Python :: 3.11",
            "Programming Language :: Python :: Implementation :: CPython",
        ],
    )


def _check_python_version():
    """Check that this is being installed in a valid version of Python.

    The ``MATROIDKL_IGNORE_VERSION_CHECK`` environment variable can be set
    to opt out of this check.
    """
    if IGNORE_VERSION_CHECK_ENV in os.environ:
        return

    major = sys.version_info.major
    minor = sys.version_info.minor
    if (major, minor) >= (3, 8):
        return

    message = INVALID_VERSION_MESSAGE.format(
        major=major, minor=minor, versions="3.8 and newer"
    )
    print(message, file=sys.stderr, end="")
    sys.exit(1)


def main():
    _check_python_version()
    setup()


if __name__ == "__main__":
    main()
