"""CSV round-trip for sequences and sampled functions (point, value_real, value_imag)."""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np


def write_samples_csv(path, points, values, point_name="index"):
    points = np.asarray(points)
    values = np.asarray(values, dtype=complex)
    if points.shape != values.shape:
        raise ValueError("points and values must have the same shape")
    with Path(path).open("w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow([point_name, "value_real", "value_imag"])
        for p, v in zip(points.tolist(), values.tolist()):
            wr.writerow([repr(p), repr(v.real), repr(v.imag)])


def read_samples_csv(path):
    """Return ``(points, values)``; values are real when every imaginary part is zero."""
    with Path(path).open(newline="") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    if len(header) != 3:
        raise ValueError(f"expected 3 columns, got {header}")
    pts = np.array([float(r[0]) for r in body])
    if header[0] == "index":
        pts = pts.astype(np.int64)
    vals = np.array([complex(float(r[1]), float(r[2])) for r in body])
    if np.all(vals.imag == 0):
        vals = vals.real
    return pts, vals


def write_sequence_csv(path, values):
    values = np.asarray(values)
    write_samples_csv(path, np.arange(values.size), values, "index")


def read_sequence_csv(path):
    idx, vals = read_samples_csv(path)
    if not np.array_equal(idx, np.arange(idx.size)):
        raise ValueError("sequence indices must be 0, 1, 2, ...")
    return vals
