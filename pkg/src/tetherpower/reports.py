"""Delimited output: the CSV dialect every command writes and can read back.

Conventions: comma separator, one header row, '.' decimals, floats in
round-trip repr.  Infeasible samples keep their coordinates but carry an
empty value field and 0 in the `feasible` column.
"""

from __future__ import annotations

import csv
from pathlib import Path


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(path: str | Path, header: list[str], rows: list[tuple]) -> None:
    path = Path(path)
    if path.parent != Path(""):
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(value) for value in row])


def read_csv(path: str | Path) -> tuple[list[str], list[dict]]:
    """Read one of this tool's CSV files; empty fields come back as None."""
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        rows = []
        for raw in reader:
            rows.append({
                key: (None if text == "" else float(text))
                for key, text in zip(header, raw)
            })
    return header, rows


def boundary_rows(points: list[tuple[float, ...]]) -> tuple[list[str], list[tuple]]:
    n = len(points[0]) if points else 2
    header = [f"f{j + 1}_n" for j in range(n)]
    return header, [tuple(point) for point in points]


def heatmap_rows(cells) -> tuple[list[str], list[tuple]]:
    header = ["f1_n", "f2_n", "ps_w", "feasible"]
    return header, [
        (f1, f2, ps, 1 if ps is not None else 0) for f1, f2, ps in cells
    ]


def length_sweep_rows(samples) -> tuple[list[str], list[tuple]]:
    header = ["length_m", "ps_w", "feasible"]
    return header, [
        (length, ps, 1 if ps is not None else 0) for length, ps in samples
    ]


def intermediate_sweep_rows(cells) -> tuple[list[str], list[tuple]]:
    header = ["y_m", "z_m", "ps_w", "feasible", "best_fraction"]
    return header, [
        (y, z, ps, 1 if ps is not None else 0, fraction)
        for y, z, ps, fraction in cells
    ]
