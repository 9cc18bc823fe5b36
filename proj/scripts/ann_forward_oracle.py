#!/usr/bin/env python3
"""Freeze a forward-pass fixture for the dense network.

Builds a small 14 -> 3 -> 2 -> 1 network with formula-generated weights,
computes the output probability with plain numpy matrix arithmetic, and
writes tests/ann_forward_fixture.json. The C++ test reloads the exact same
numbers and must reproduce the probability to ~1e-12.
"""

import json
import math
from pathlib import Path

import numpy as np


def gen_matrix(rows, cols, phase):
    return np.array([[0.3 * math.sin(phase + 1.7 * r + 0.31 * c) for c in range(cols)]
                     for r in range(rows)])


def main():
    sizes = [14, 3, 2, 1]
    weights = [gen_matrix(sizes[i + 1], sizes[i], phase=float(i)) for i in range(3)]
    biases = [np.array([0.05 * (k + 1) * (-1) ** k for k in range(sizes[i + 1])])
              for i in range(3)]
    x = np.array([math.cos(0.9 * k) * (k + 1) / 7.0 for k in range(14)])

    a = x
    for layer in range(3):
        z = weights[layer] @ a + biases[layer]
        a = np.maximum(z, 0.0) if layer < 2 else 1.0 / (1.0 + np.exp(-z))

    fixture = {
        "layers": [{"weights": w.tolist(), "biases": b.tolist()}
                   for w, b in zip(weights, biases)],
        "input": x.tolist(),
        "expected_probability": float(a[0]),
    }
    out = Path("tests/ann_forward_fixture.json")
    out.write_text(json.dumps(fixture, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {out}, expected probability {a[0]:.17g}")


if __name__ == "__main__":
    main()
