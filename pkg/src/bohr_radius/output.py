"""Deterministic output records: canonical JSON and CSV.

Floats are always printed with 12 significant digits, switching to lowercase
scientific notation once the rounded value reaches 1e6 or drops below 1e-4.
Serializing, parsing and re-serializing a record is byte-identical, which
keeps table diffs reproducible.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Any, Mapping, Optional, Sequence

from .classes import AlphaConvex, ClassSpec, Janowski, SecondOrder, TypicallyReal
from .solver import Area, PowerP, RadiusProblem, RadiusResult, Refined, Variant

CSV_FIELDS = (
    "class",
    "params",
    "variant",
    "phi_or_p",
    "root",
    "residual",
    "iterations",
    "paper_value",
    "abs_diff",
    "flag",
)


def fmt_float(x: float) -> str:
    """12-significant-digit decimal; scientific once |x| rounds to >= 1e6 or < 1e-4."""
    if not math.isfinite(x):
        raise ValueError(f"records must contain finite floats, got {x}")
    if x == 0.0:
        return "0"
    sci = f"{x:.11e}"
    exponent = int(sci.split("e")[1])
    if exponent >= 6 or exponent <= -5:
        return sci
    return f"{x:.{11 - exponent}f}"


def to_json(value: Any) -> str:
    """Compact JSON with canonical float formatting and insertion-order keys."""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return repr(value)
    if isinstance(value, float):
        return fmt_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, Mapping):
        inner = ",".join(f"{json.dumps(str(k))}:{to_json(v)}" for k, v in value.items())
        return "{" + inner + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(to_json(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def class_name(spec: ClassSpec) -> str:
    if isinstance(spec, Janowski):
        return "janowski"
    if isinstance(spec, AlphaConvex):
        return "alpha-convex"
    if isinstance(spec, SecondOrder):
        return "second-order"
    if isinstance(spec, TypicallyReal):
        return "typically-real"
    raise TypeError(f"not a ClassSpec: {spec!r}")


def class_params(spec: ClassSpec) -> dict[str, float]:
    if isinstance(spec, Janowski):
        return {"A": spec.A, "B": spec.B}
    if isinstance(spec, AlphaConvex):
        return {"alpha": spec.alpha}
    if isinstance(spec, SecondOrder):
        return {"beta": spec.beta, "gamma": spec.gamma, "A": spec.h.A, "B": spec.h.B}
    if isinstance(spec, TypicallyReal):
        return {}
    raise TypeError(f"not a ClassSpec: {spec!r}")


def variant_name(variant: Variant) -> str:
    if isinstance(variant, Refined):
        return "refined"
    if isinstance(variant, PowerP):
        return "power"
    if isinstance(variant, Area):
        return "area"
    raise TypeError(f"not a Variant: {variant!r}")


def phi_or_p_label(variant: Variant) -> str:
    if isinstance(variant, PowerP):
        return f"p={variant.p:g}"
    return variant.phi.value


def describe_problem(prob: RadiusProblem) -> str:
    params = class_params(prob.cls)
    inside = ", ".join(f"{k}={v:g}" for k, v in params.items())
    cls = class_name(prob.cls) + (f"({inside})" if inside else "")
    return f"{cls} {variant_name(prob.variant)}({phi_or_p_label(prob.variant)})"


@dataclass
class OutputRecord:
    """One solved radius (or failed cell) in CLI-serializable form."""

    cls: str
    params: dict[str, float]
    variant: str
    phi_or_p: str
    root: Optional[float]
    residual: Optional[float]
    iterations: int
    paper_value: Optional[float] = None
    abs_diff: Optional[float] = None
    flag: Optional[str] = None

    def __post_init__(self) -> None:
        if (self.paper_value is None) != (self.abs_diff is None) and self.root is not None:
            raise ValueError("abs_diff must be present exactly when paper_value is")

    def to_dict(self) -> dict[str, Any]:
        return {
            "class": self.cls,
            "params": self.params,
            "variant": self.variant,
            "phi_or_p": self.phi_or_p,
            "root": self.root,
            "residual": self.residual,
            "iterations": self.iterations,
            "paper_value": self.paper_value,
            "abs_diff": self.abs_diff,
            "flag": self.flag,
        }


def record_for(
    prob: RadiusProblem,
    res: RadiusResult,
    paper_value: Optional[float] = None,
    flag: Optional[str] = None,
) -> OutputRecord:
    abs_diff = None if paper_value is None else abs(res.root - paper_value)
    return OutputRecord(
        cls=class_name(prob.cls),
        params=class_params(prob.cls),
        variant=variant_name(prob.variant),
        phi_or_p=phi_or_p_label(prob.variant),
        root=res.root,
        residual=res.residual,
        iterations=res.iterations,
        paper_value=paper_value,
        abs_diff=abs_diff,
        flag=flag,
    )


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return fmt_float(value)
    if isinstance(value, Mapping):
        return ";".join(f"{k}={fmt_float(float(v))}" for k, v in value.items())
    return str(value)


def records_to_csv(records: Sequence[OutputRecord]) -> str:
    """One header row plus one row per record."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for rec in records:
        d = rec.to_dict()
        writer.writerow([_csv_cell(d[k]) for k in CSV_FIELDS])
    return buf.getvalue()
