"""JSON and plain-text interchange formats for instances and certificates.

Serialization is deterministic: keys are emitted in a fixed order with no
whitespace variance, so identical inputs produce byte-identical files on
every run and platform.
"""

from __future__ import annotations

import json
import os
import tempfile

from .instances import ListAssignment
from .solver import ColorabilityResult

INSTANCE_FORMAT_VERSION = 1


class FormatError(ValueError):
    """An instance or certificate file violates the documented schema."""


# -- instances -----------------------------------------------------------------

def instance_to_json_dict(assignment: ListAssignment) -> dict:
    out = {
        "format_version": INSTANCE_FORMAT_VERSION,
        "n": assignment.n,
        "c": assignment.c,
        "k": assignment.k,
        "num_colors": assignment.num_colors,
        "lists": [list(lst) for lst in assignment.lists],
    }
    out["meta"] = assignment.meta if assignment.meta is not None else {}
    return out


def dumps_instance(assignment: ListAssignment) -> str:
    return json.dumps(instance_to_json_dict(assignment), separators=(",", ":")) + "\n"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FormatError(message)


def _is_int(value) -> bool:
    # bool is an int subclass; JSON true/false must not pass as numbers
    return isinstance(value, int) and not isinstance(value, bool)


def instance_from_json_dict(data) -> ListAssignment:
    _require(isinstance(data, dict), "instance must be a JSON object")
    for key in ("format_version", "n", "c", "k", "num_colors", "lists"):
        _require(key in data, f"missing required field '{key}'")
    _require(data["format_version"] == INSTANCE_FORMAT_VERSION,
             f"unsupported format_version {data['format_version']!r}")
    n, c, k, num_colors = data["n"], data["c"], data["k"], data["num_colors"]
    for name, value in (("n", n), ("c", c), ("k", k), ("num_colors", num_colors)):
        _require(_is_int(value) and value >= 0,
                 f"field '{name}' must be a nonnegative integer, got {value!r}")
    lists = data["lists"]
    _require(isinstance(lists, list), "field 'lists' must be an array")
    _require(len(lists) == n, f"expected {n} lists, found {len(lists)}")
    parsed = []
    for v, lst in enumerate(lists):
        _require(isinstance(lst, list), f"lists[{v}] must be an array")
        _require(len(lst) == k, f"lists[{v}] has {len(lst)} colors, expected k={k}")
        for color in lst:
            _require(_is_int(color) and 0 <= color < num_colors,
                     f"lists[{v}] contains {color!r}, outside [0, {num_colors})")
        _require(all(a < b for a, b in zip(lst, lst[1:])),
                 f"lists[{v}] must be strictly increasing")
        parsed.append(tuple(lst))
    meta = data.get("meta")
    _require(meta is None or isinstance(meta, dict), "field 'meta' must be an object")
    return ListAssignment(n=n, k=k, c=c, num_colors=num_colors,
                          lists=tuple(parsed), meta=meta or None)


def loads_instance(text: str) -> ListAssignment:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    return instance_from_json_dict(data)


def instance_to_text(assignment: ListAssignment) -> str:
    """Plain-text export: header 'n c k num_colors', then one
    space-separated color list per vertex."""
    lines = [f"{assignment.n} {assignment.c} {assignment.k} {assignment.num_colors}"]
    lines.extend(" ".join(str(color) for color in lst) for lst in assignment.lists)
    return "\n".join(lines) + "\n"


# -- certificates ----------------------------------------------------------------

def certificate_to_json_dict(result: ColorabilityResult) -> dict:
    if result.colorable:
        return {"colorable": True, "coloring": list(result.coloring)}
    violator_s, neighborhood = result.violator
    return {
        "colorable": False,
        "violator_S": list(violator_s),
        "neighborhood": list(neighborhood),
    }


def dumps_certificate(result: ColorabilityResult) -> str:
    return json.dumps(certificate_to_json_dict(result), separators=(",", ":")) + "\n"


def certificate_from_json_dict(data) -> ColorabilityResult:
    _require(isinstance(data, dict), "certificate must be a JSON object")
    _require("colorable" in data, "missing required field 'colorable'")
    if data["colorable"] is True:
        coloring = data.get("coloring")
        _require(isinstance(coloring, list) and all(_is_int(x) for x in coloring),
                 "field 'coloring' must be an array of integers")
        return ColorabilityResult(coloring=tuple(coloring))
    _require(data["colorable"] is False, "field 'colorable' must be a boolean")
    for key in ("violator_S", "neighborhood"):
        value = data.get(key)
        _require(isinstance(value, list) and all(_is_int(x) for x in value),
                 f"field '{key}' must be an array of integers")
    return ColorabilityResult(
        violator=(tuple(data["violator_S"]), tuple(data["neighborhood"]))
    )


def loads_certificate(text: str) -> ColorabilityResult:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    return certificate_from_json_dict(data)


# -- files ------------------------------------------------------------------------

def write_atomic(path: str, text: str) -> None:
    """Write via a temp file in the target directory plus rename, so a
    failed run never leaves a partial output file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise
