"""JSON interchange for tensors.

A tensor document looks like::

    {"left_modes": [2, 3], "right_modes": [2, 3],
     "real": [...], "imag": [...], "order": "col-major"}

``real``/``imag`` are flat in the declared linearization; ``imag`` may be
omitted for real tensors. ``"row-major"`` is accepted on input.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

import numpy as np

from .errors import TensorFileError
from .tensor import DenseTensor, TensorShape

ORDERS = {"col-major": "F", "row-major": "C"}


def _float_list(values) -> list:
    return [float(v) for v in values]


def tensor_to_dict(t: DenseTensor, include_imag: bool = True) -> dict:
    """Serialize to a column-major tensor document."""
    flat = t.entries
    doc = {
        "left_modes": list(t.left_modes),
        "right_modes": list(t.right_modes),
        "real": _float_list(flat.real),
        "order": "col-major",
    }
    if include_imag or np.any(flat.imag):
        doc["imag"] = _float_list(flat.imag)
    return doc


def tensor_from_dict(doc: dict) -> DenseTensor:
    """Parse a tensor document, rejecting malformed or mis-sized input."""
    if not isinstance(doc, dict):
        raise TensorFileError("tensor document must be a JSON object")
    for key in ("left_modes", "right_modes", "real"):
        if key not in doc:
            raise TensorFileError(f"tensor document is missing {key!r}")
    order = doc.get("order", "col-major")
    if order not in ORDERS:
        raise TensorFileError(f"unsupported order {order!r}; expected one of {sorted(ORDERS)}")
    try:
        shape = TensorShape(tuple(doc["left_modes"]), tuple(doc["right_modes"]))
        real = np.asarray(doc["real"], dtype=np.float64)
        imag = np.asarray(doc.get("imag", np.zeros_like(real)), dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise TensorFileError(f"malformed tensor document: {exc}") from exc
    if real.ndim != 1 or imag.ndim != 1:
        raise TensorFileError("real/imag must be flat arrays")
    if real.size != shape.size:
        raise TensorFileError(f"real has {real.size} entries, shape {shape} needs {shape.size}")
    if imag.size != shape.size:
        raise TensorFileError(f"imag has {imag.size} entries, shape {shape} needs {shape.size}")
    values = (real + 1j * imag).reshape(shape.dims, order=ORDERS[order])
    try:
        return DenseTensor(values, len(shape.left_modes))
    except ValueError as exc:
        raise TensorFileError(str(exc)) from exc


def dumps(obj, **kwargs) -> str:
    # float repr is the shortest string that round-trips a double exactly
    return json.dumps(obj, allow_nan=False, **kwargs)


def load_tensor(path: Union[str, Path]) -> DenseTensor:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise TensorFileError(f"{path}: invalid JSON: {exc}") from exc
    return tensor_from_dict(doc)


def save_tensor(t: DenseTensor, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(tensor_to_dict(t), indent=1) + "\n")
