"""Loading instances from files or from the bundled corpus."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .algebra import AlgebraInstance, instance_from_json
from .errors import MalformedInputError

# non-regular instances first, then the regular controls
NON_REGULAR = [
    "set_3_2",
    "set_4_2",
    "set_4_3",
    "set_5_2",
    "set_5_3",
    "vec_2_2_1",
    "vec_2_3_1",
    "vec_2_3_2",
    "vec_3_2_1",
]
REGULAR_CONTROLS = ["set_3_3", "set_4_1"]
CORPUS = NON_REGULAR + REGULAR_CONTROLS


def corpus_instance(name: str) -> AlgebraInstance:
    ref = resources.files(__package__).joinpath("corpus", f"{name}.json")
    if not ref.is_file():
        raise MalformedInputError(f"no bundled instance named {name!r}")
    return instance_from_json(json.loads(ref.read_text()))


def load_instance(source: str) -> AlgebraInstance:
    """A path to an instance JSON file, or the name of a bundled instance."""
    path = Path(source)
    if path.is_file():
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"{source}: invalid JSON ({exc})") from exc
        return instance_from_json(data)
    name = path.stem if path.suffix == ".json" else source
    if name in CORPUS:
        return corpus_instance(name)
    raise MalformedInputError(f"{source}: no such file or bundled instance")
