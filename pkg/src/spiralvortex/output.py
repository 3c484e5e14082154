"""CSV and SVG emitters. Both are dependency-free and byte-deterministic."""
from __future__ import annotations

import contextlib
import io
import math
import os
from typing import IO

import numpy as np

from .errors import EmptyTrace, InvalidParameter, IoError
from .streamline import Trace2D
from .tornado3d import Trace3D

SVG_WIDTH = 800
PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
    "#9467bd", "#8c564b", "#e377c2", "#17becf",
)
# oblique view used to flatten 3D traces: screen = (x + s y, z + s y)
OBLIQUE_SHEAR = 0.35


def format_float(v: float) -> str:
    return format(float(v), ".17g")


@contextlib.contextmanager
def _open_dest(dest):
    if dest is None or dest == "-":
        raise InvalidParameter("destination must be a path or a text stream")
    if isinstance(dest, (str, os.PathLike)):
        try:
            with open(dest, "w", encoding="utf-8", newline="\n") as fh:
                yield fh
        except OSError as exc:
            raise IoError(f"cannot write {os.fspath(dest)!r}: {exc.strerror or exc}") from exc
    else:
        try:
            yield dest
        except OSError as exc:
            raise IoError(f"write failed: {exc}") from exc


def write_csv(header, rows, dest: str | os.PathLike | IO[str]) -> None:
    """Header line, then one line per row, numbers at 17 significant digits."""
    data = np.asarray(rows, dtype=np.float64)
    if data.ndim != 2 or data.shape[0] == 0:
        raise InvalidParameter("rows must be a nonempty rectangular table")
    if data.shape[1] != len(header):
        raise InvalidParameter(f"header has {len(header)} columns, rows have {data.shape[1]}")
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in data:
        buf.write(",".join(format_float(v) for v in row) + "\n")
    with _open_dest(dest) as fh:
        fh.write(buf.getvalue())


def trace_table(trace: Trace2D | Trace3D) -> tuple[list[str], np.ndarray]:
    if isinstance(trace, Trace3D):
        return ["t", "x", "y", "z"], np.column_stack([trace.t, trace.xyz])
    return ["t", "x", "y"], np.column_stack([trace.t, trace.xy])


def read_csv(src, names: tuple[str, ...]) -> np.ndarray:
    """Read a numeric CSV whose header must equal ``names``.

    Returns an (n, len(names)) array; n may be 0.
    """
    try:
        with open(src, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise IoError(f"cannot read {os.fspath(src)!r}: {exc.strerror or exc}") from exc
    if not lines:
        return np.empty((0, len(names)))
    head = tuple(h.strip() for h in lines[0].split(","))
    if head != names:
        raise InvalidParameter(f"expected header {','.join(names)!r}, got {lines[0]!r}")
    rows = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split(",")
        if len(parts) != len(names):
            raise InvalidParameter(f"line {i}: expected {len(names)} fields, got {len(parts)}")
        try:
            rows.append([float(p) for p in parts])
        except ValueError as exc:
            raise InvalidParameter(f"line {i}: {exc}") from exc
    return np.asarray(rows, dtype=np.float64).reshape(-1, len(names))


def oblique_projection(xyz) -> np.ndarray:
    xyz = np.asarray(xyz, dtype=np.float64)
    return np.column_stack([xyz[:, 0] + OBLIQUE_SHEAR * xyz[:, 1], xyz[:, 2] + OBLIQUE_SHEAR * xyz[:, 1]])


def tornado_polylines(trace: Trace3D) -> list[np.ndarray]:
    """The 3D trace and its xy-shadow laid on the plane of the lowest z."""
    flat = trace.xyz.copy()
    flat[:, 2] = trace.xyz[:, 2].min()
    return [oblique_projection(trace.xyz), oblique_projection(flat)]


def _polyline_points(tr) -> np.ndarray:
    if isinstance(tr, Trace2D):
        pts = tr.xy
    elif isinstance(tr, Trace3D):
        pts = oblique_projection(tr.xyz)
    else:
        pts = np.asarray(tr, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise InvalidParameter(f"polyline must have shape (n, 2), got {pts.shape}")
    if pts.shape[0] < 2:
        raise EmptyTrace("every trace needs at least 2 points")
    return pts[np.all(np.isfinite(pts), axis=1)]


def _num(v: float) -> str:
    s = format(v, ".8g")
    return "0" if s == "-0" else s


def write_svg(traces, dest: str | os.PathLike | IO[str]) -> None:
    """One polyline per trace on an 800-wide canvas, mathematical y-up.

    The viewBox is the data bounding box padded by 5% per side.
    """
    polys = [_polyline_points(tr) for tr in traces]
    if not polys or any(p.shape[0] < 2 for p in polys):
        raise EmptyTrace("nothing to draw")
    allpts = np.vstack(polys)
    xmin, ymin = allpts.min(axis=0)
    xmax, ymax = allpts.max(axis=0)
    w, h = xmax - xmin, ymax - ymin
    if w <= 0 and h <= 0:
        w = h = 1.0
    elif w <= 0:
        w = h
    elif h <= 0:
        h = w
    cx, cy = 0.5 * (xmin + xmax), 0.5 * (ymin + ymax)
    xmin, xmax = cx - 0.5 * w, cx + 0.5 * w
    ymin, ymax = cy - 0.5 * h, cy + 0.5 * h
    px, py = 0.05 * w, 0.05 * h
    vb_x, vb_w = xmin - px, w + 2 * px
    # y is flipped: screen y = -data y
    vb_y, vb_h = -(ymax + py), h + 2 * py
    height = max(1, int(math.floor(SVG_WIDTH * vb_h / vb_w + 0.5)))

    out = io.StringIO()
    out.write('<?xml version="1.0" encoding="UTF-8"?>\n')
    out.write(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{height}" '
        f'viewBox="{_num(vb_x)} {_num(vb_y)} {_num(vb_w)} {_num(vb_h)}">\n'
    )
    for i, p in enumerate(polys):
        coords = " ".join(f"{_num(x)},{_num(-y)}" for x, y in p)
        out.write(
            f'<polyline fill="none" stroke="{PALETTE[i % len(PALETTE)]}" stroke-width="1" '
            f'vector-effect="non-scaling-stroke" points="{coords}"/>\n'
        )
    out.write("</svg>\n")
    with _open_dest(dest) as fh:
        fh.write(out.getvalue())
