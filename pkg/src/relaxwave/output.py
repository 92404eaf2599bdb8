"""Deterministic file output: CSV, canonical JSON, flat config, tiny SVG.

Every artifact is reproducible byte for byte from identical inputs: floats
are printed with 17 significant digits, JSON keys are sorted, CSV uses
RFC-4180 CRLF line endings, and nothing emits timestamps or hostnames.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import DomainError

__all__ = [
    "fmt",
    "csv_text",
    "write_csv",
    "to_jsonable",
    "canonical_json",
    "write_json",
    "parse_config",
    "config_float",
    "config_int",
    "config_str",
    "config_float_list",
    "write_svg",
]

_PALETTE = ("#1f3a93", "#c0392b", "#14865c", "#8e44ad", "#b7950b", "#1a7a8a")


def fmt(x: float) -> str:
    """17-significant-digit text form of a float; -0.0 is normalized."""
    x = float(x)
    if x == 0.0:
        x = 0.0
    return "%.17g" % x


def _cell(v: Any) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return fmt(float(v))
    raise DomainError(f"cannot format CSV cell of type {type(v).__name__}")


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """RFC-4180 CSV text (CRLF endings, 17-digit floats)."""
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\r\n")
    wr.writerow(list(header))
    for row in rows:
        wr.writerow([_cell(v) for v in row])
    return buf.getvalue()


def write_csv(path: str | Path, header: Sequence[str],
              rows: Iterable[Sequence[Any]]) -> None:
    """Write an RFC-4180 CSV (CRLF endings, 17-digit floats)."""
    with open(Path(path), "w", newline="", encoding="utf-8") as fh:
        fh.write(csv_text(header, rows))


def to_jsonable(obj: Any) -> Any:
    """Recursively convert dataclasses/numpy/complex values to JSON types."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name))
                for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return 0.0 if v == 0.0 else v
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": to_jsonable(obj.real), "im": to_jsonable(obj.imag)}
    if obj is None or isinstance(obj, str):
        return obj
    raise DomainError(f"cannot serialize object of type {type(obj).__name__}")


def canonical_json(obj: Any) -> str:
    """Sorted-key, 2-space-indented JSON text with a trailing newline."""
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"


def write_json(path: str | Path, obj: Any) -> None:
    with open(Path(path), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(canonical_json(obj))


def parse_config(text: str) -> dict[str, str]:
    """Parse flat ``key = value`` text; ``#`` starts a comment; last key wins."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"config line {lineno}: expected 'key = value'")
        key, val = line.split("=", 1)
        key = key.strip()
        if not key:
            raise DomainError(f"config line {lineno}: empty key")
        out[key] = val.strip()
    return out


def config_float(cfg: dict[str, str], key: str, default: float | None = None) -> float:
    if key not in cfg:
        if default is None:
            raise DomainError(f"config key {key!r} is required")
        return default
    try:
        return float(cfg[key])
    except ValueError as exc:
        raise DomainError(f"config key {key!r}: not a number: {cfg[key]!r}") from exc


def config_int(cfg: dict[str, str], key: str, default: int | None = None) -> int:
    if key not in cfg:
        if default is None:
            raise DomainError(f"config key {key!r} is required")
        return default
    try:
        return int(cfg[key])
    except ValueError as exc:
        raise DomainError(f"config key {key!r}: not an integer: {cfg[key]!r}") from exc


def config_str(cfg: dict[str, str], key: str, default: str | None = None) -> str:
    if key not in cfg:
        if default is None:
            raise DomainError(f"config key {key!r} is required")
        return default
    return cfg[key]


def config_float_list(cfg: dict[str, str], key: str,
                      default: Sequence[float] | None = None) -> list[float]:
    if key not in cfg:
        if default is None:
            raise DomainError(f"config key {key!r} is required")
        return list(default)
    items = [s for s in cfg[key].split(",") if s.strip()]
    try:
        return [float(s) for s in items]
    except ValueError as exc:
        raise DomainError(f"config key {key!r}: not a number list") from exc


def _svg_coord(v: float) -> str:
    return "%.4f" % v


def write_svg(path: str | Path, curves: Sequence[tuple[np.ndarray, np.ndarray, str]],
              xlabel: str, ylabel: str, width: int = 640, height: int = 480) -> None:
    """Plot parametric curves as native SVG polylines with axis labels.

    ``curves`` is a sequence of ``(x, y, label)`` triples sharing one frame.
    """
    if not curves:
        raise DomainError("write_svg needs at least one curve")
    margin = 56.0
    xs = np.concatenate([np.asarray(c[0], dtype=float) for c in curves])
    ys = np.concatenate([np.asarray(c[1], dtype=float) for c in curves])
    x_lo, x_hi = float(xs.min()), float(xs.max())
    y_lo, y_hi = float(ys.min()), float(ys.max())
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    px = width - 2.0 * margin
    py = height - 2.0 * margin

    def mapx(x: np.ndarray) -> np.ndarray:
        return margin + (x - x_lo) / (x_hi - x_lo) * px

    def mapy(y: np.ndarray) -> np.ndarray:
        return height - margin - (y - y_lo) / (y_hi - y_lo) * py

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{_svg_coord(margin)}" y="{_svg_coord(margin)}" '
        f'width="{_svg_coord(px)}" height="{_svg_coord(py)}" '
        f'fill="none" stroke="black" stroke-width="1"/>',
        f'<text x="{_svg_coord(width / 2.0)}" y="{_svg_coord(height - 14.0)}" '
        f'text-anchor="middle" font-size="16">{xlabel}</text>',
        f'<text x="{_svg_coord(18.0)}" y="{_svg_coord(height / 2.0)}" '
        f'text-anchor="middle" font-size="16" '
        f'transform="rotate(-90 18 {_svg_coord(height / 2.0)})">{ylabel}</text>',
        f'<text x="{_svg_coord(margin)}" y="{_svg_coord(height - margin + 18.0)}" '
        f'text-anchor="middle" font-size="11">{fmt(x_lo)[:10]}</text>',
        f'<text x="{_svg_coord(width - margin)}" y="{_svg_coord(height - margin + 18.0)}" '
        f'text-anchor="middle" font-size="11">{fmt(x_hi)[:10]}</text>',
        f'<text x="{_svg_coord(margin - 6.0)}" y="{_svg_coord(height - margin)}" '
        f'text-anchor="end" font-size="11">{fmt(y_lo)[:10]}</text>',
        f'<text x="{_svg_coord(margin - 6.0)}" y="{_svg_coord(margin + 4.0)}" '
        f'text-anchor="end" font-size="11">{fmt(y_hi)[:10]}</text>',
    ]
    for idx, (cx, cy, label) in enumerate(curves):
        color = _PALETTE[idx % len(_PALETTE)]
        X = mapx(np.asarray(cx, dtype=float))
        Y = mapy(np.asarray(cy, dtype=float))
        pts = " ".join(f"{_svg_coord(a)},{_svg_coord(b)}" for a, b in zip(X, Y))
        parts.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
                     f'points="{pts}"/>')
        parts.append(f'<text x="{_svg_coord(margin + 8.0)}" '
                     f'y="{_svg_coord(margin + 18.0 + 16.0 * idx)}" '
                     f'font-size="12" fill="{color}">{label}</text>')
    parts.append("</svg>")
    with open(Path(path), "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")
