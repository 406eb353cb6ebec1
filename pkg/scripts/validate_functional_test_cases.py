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

"""Check the functional test data against its JSON schemas.

Each data file maps an ID to a value. The exit status has bit 2**i set
when the i-th entry of DATA_MAPS has an invalid value.
"""

import json
import os
import pathlib
import sys

import jsonschema


HERE = pathlib.Path(__file__).resolve().parent
REPO_ROOT = HERE.parent
DATA_DIR = REPO_ROOT / "tests" / "functional"
SCHEMA_DIR = DATA_DIR / "schema"
DATA_MAPS = (
    ("matroids.json", "matroid.json", "Matroid"),
    ("equivariant.json", "equivariant.json", "Character"),
)


def _load(path):
    with open(path, "r", encoding="utf-8") as file_obj:
        return json.load(file_obj)


def _verify_map(map_filename, schema_filename, name):
    """Verifies a map with string keys and values of a given schema.

    Args:
        map_filename (pathlib.Path): The data file.
        schema_filename (pathlib.Path): The schema for each value.
        name (str): The name of the schema, used in messages.

    Returns:
        bool: Indicates if there were any failures.
    """
    object_map = _load(map_filename)
    schema = _load(schema_filename)
    # NOTE: ``$ref`` entries point at sibling files in ``SCHEMA_DIR``.
    resolver = jsonschema.RefResolver(
        base_uri=f"file://{SCHEMA_DIR}{os.path.sep}", referrer=schema
    )
    validator = jsonschema.Draft4Validator(schema, resolver=resolver)
    failed = False
    for object_id, info in object_map.items():
        for error in validator.iter_errors(info):
            print(f"{name} {object_id} does not adhere to the schema.")
            print(f"  {error.message}")
            failed = True
    return failed


def main():
    """Main entrypoint for this script."""
    exit_status = 0
    for bit, (data_name, schema_name, name) in enumerate(DATA_MAPS):
        if _verify_map(DATA_DIR / data_name, SCHEMA_DIR / schema_name, name):
            exit_status |= 1 << bit
    sys.exit(exit_status)


if __name__ == "__main__":
    main()
