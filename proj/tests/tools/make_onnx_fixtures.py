"""Regenerate the tiny ONNX networks under tests/fixtures/onnx.

Each image network averages the three input channels and applies a fixed
linear map; the text network is a linear map of the token row. Weights come
from a seeded numpy generator so the files are reproducible.
"""
import os
import sys

import numpy as np
import onnx
from onnx import TensorProto, helper, numpy_helper

CROP = 32
CTX = 8


def image_model(out_dim, rng, name):
    w = rng.standard_normal((3, out_dim)).astype(np.float32)
    b = rng.standard_normal((out_dim,)).astype(np.float32) * 0.1
    nodes = [
        helper.make_node("GlobalAveragePool", ["image"], ["pooled"]),
        helper.make_node("Flatten", ["pooled"], ["flat"], axis=1),
        helper.make_node("MatMul", ["flat", "w"], ["proj"]),
        helper.make_node("Add", ["proj", "b"], ["output"]),
    ]
    graph = helper.make_graph(
        nodes,
        name,
        [helper.make_tensor_value_info("image", TensorProto.FLOAT, [1, 3, CROP, CROP])],
        [helper.make_tensor_value_info("output", TensorProto.FLOAT, [1, out_dim])],
        [numpy_helper.from_array(w, "w"), numpy_helper.from_array(b, "b")],
    )
    return helper.make_model(graph, opset_imports=[helper.make_opsetid("", 11)], producer_name="artmod-tests")


def text_model(out_dim, rng):
    w = (rng.standard_normal((CTX, out_dim)) * 0.01).astype(np.float32)
    b = np.ones((out_dim,), dtype=np.float32)
    nodes = [
        helper.make_node("MatMul", ["tokens", "w"], ["proj"]),
        helper.make_node("Add", ["proj", "b"], ["output"]),
    ]
    graph = helper.make_graph(
        nodes,
        "text",
        [helper.make_tensor_value_info("tokens", TensorProto.FLOAT, [1, CTX])],
        [helper.make_tensor_value_info("output", TensorProto.FLOAT, [1, out_dim])],
        [numpy_helper.from_array(w, "w"), numpy_helper.from_array(b, "b")],
    )
    return helper.make_model(graph, opset_imports=[helper.make_opsetid("", 11)], producer_name="artmod-tests")


def main(out_dir):
    rng = np.random.default_rng(20240101)
    models = {
        "image_512.onnx": image_model(512, rng, "image512"),
        "image_4.onnx": image_model(4, rng, "image4"),
        "text_4.onnx": text_model(4, rng),
        "scorer_2.onnx": image_model(2, rng, "scorer"),
    }
    os.makedirs(out_dir, exist_ok=True)
    for name, model in models.items():
        model.ir_version = 7
        onnx.checker.check_model(model)
        onnx.save(model, os.path.join(out_dir, name))
    # Five merges are enough to exercise the BPE loop on "porn" and "art".
    with open(os.path.join(out_dir, "merges.txt"), "w") as f:
        f.write("#version: 0.2\np o\npo r\npor n</w>\na r\nar t</w>\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "fixtures", "onnx"))
