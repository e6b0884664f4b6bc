import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from tensorginv import DenseTensor, TensorFileError
from tensorginv.io import dumps, load_tensor, save_tensor, tensor_from_dict, tensor_to_dict

from builders import random_tensor


def test_document_layout():
    t = DenseTensor.from_entries([1, 2, 3, 4j], DenseTensor(np.zeros((2, 2))).shape)
    doc = tensor_to_dict(t)
    assert doc == {
        "left_modes": [2],
        "right_modes": [2],
        "real": [1.0, 2.0, 3.0, 0.0],
        "order": "col-major",
        "imag": [0.0, 0.0, 0.0, 4.0],
    }


def test_real_tensor_may_omit_imag():
    t = DenseTensor(np.eye(2))
    assert "imag" not in tensor_to_dict(t, include_imag=False)
    assert "imag" in tensor_to_dict(DenseTensor(1j * np.eye(2)), include_imag=False)


def test_row_major_input():
    doc = {"left_modes": [2], "right_modes": [3], "real": [0, 1, 2, 3, 4, 5], "order": "row-major"}
    np.testing.assert_array_equal(tensor_from_dict(doc).array.real, [[0, 1, 2], [3, 4, 5]])


@given(
    data=arrays(
        np.float64,
        st.sampled_from([(2, 2), (2, 3, 2, 3), (1, 2, 2, 1)]),
        elements=st.floats(allow_nan=False, allow_infinity=False, width=64),
    )
)
@settings(max_examples=50, deadline=None)
def test_round_trip_is_bit_exact(data):
    t = DenseTensor(data - 0.5j * data[::-1])
    back = tensor_from_dict(json.loads(dumps(tensor_to_dict(t))))
    assert back.shape == t.shape
    bits = lambda x: np.ascontiguousarray(x).view(np.uint64)  # noqa: E731
    assert np.array_equal(bits(back.array), bits(t.array))


def test_file_round_trip(tmp_path):
    t = random_tensor(np.random.default_rng(4), (2, 3), (3,))
    path = tmp_path / "t.json"
    save_tensor(t, path)
    np.testing.assert_array_equal(load_tensor(path).array, t.array)


@pytest.mark.parametrize(
    "doc",
    [
        [],
        {"right_modes": [2], "real": [0, 0, 0, 0]},
        {"left_modes": [2], "right_modes": [2], "real": [0, 0, 0]},
        {"left_modes": [2], "right_modes": [2], "real": [0, 0, 0, 0], "imag": [0]},
        {"left_modes": [2], "right_modes": [2], "real": [0, 0, 0, 0], "order": "diagonal"},
        {"left_modes": [2], "right_modes": [2], "real": ["a", 0, 0, 0]},
        {"left_modes": [2], "right_modes": [2], "real": [[0, 0], [0, 0]]},
        {"left_modes": [0], "right_modes": [2], "real": []},
    ],
)
def test_malformed_documents(doc):
    with pytest.raises(TensorFileError):
        tensor_from_dict(doc)


def test_invalid_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(TensorFileError):
        load_tensor(path)


def test_nan_refused():
    with pytest.raises(ValueError):
        dumps({"x": float("nan")})
