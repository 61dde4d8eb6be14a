"""JSON coefficient files and report serialization.

Floats are written with 17 significant digits by a small dedicated
emitter, so output bytes depend only on the values.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import HarmonicError
from .operator import ClassParams
from .series import Convention, HarmonicSeries, make_series
from .verify import ClaimReport


class CoefficientFileError(HarmonicError):
    """Malformed coefficient file; the message names the offending field."""


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x) or math.isinf(x):
            return json.dumps(None)
        s = fmt(x)
        return s if any(c in s for c in ".en") else s + ".0"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def series_to_dict(f: HarmonicSeries) -> dict:
    def terms(coeffs, start):
        return [{"v": v, "re": float(c.real) + 0.0, "im": float(c.imag) + 0.0}
                for v, c in enumerate(coeffs, start=1) if v >= start and c != 0]
    return {"degree": f.degree, "convention": f.convention.value,
            "a": terms(f.a, 2), "b": terms(f.b, 1)}


def _field(d, key, kind, where):
    if key not in d:
        raise CoefficientFileError(f"missing field '{where}{key}'")
    val = d[key]
    ok = (isinstance(val, int) and not isinstance(val, bool)) if kind is int else \
        (isinstance(val, (int, float)) and not isinstance(val, bool)) if kind is float else \
        isinstance(val, kind)
    if not ok:
        raise CoefficientFileError(f"field '{where}{key}' has the wrong type")
    return val


def series_from_dict(d: dict) -> HarmonicSeries:
    if not isinstance(d, dict):
        raise CoefficientFileError("top level must be a JSON object")
    degree = _field(d, "degree", int, "")
    if degree < 1:
        raise CoefficientFileError("field 'degree' must be >= 1")
    conv = _field(d, "convention", str, "")
    try:
        convention = Convention(conv)
    except ValueError:
        raise CoefficientFileError(f"field 'convention' has unknown value {conv!r}") from None
    coeffs = {}
    for part, lo in (("a", 2), ("b", 1)):
        entries = d.get(part, [])
        if not isinstance(entries, list):
            raise CoefficientFileError(f"field '{part}' must be a list")
        arr = np.zeros(degree, dtype=complex)
        for i, e in enumerate(entries):
            where = f"{part}[{i}]."
            if not isinstance(e, dict):
                raise CoefficientFileError(f"field '{part}[{i}]' must be an object")
            v = _field(e, "v", int, where)
            if not lo <= v <= degree:
                raise CoefficientFileError(f"field '{where}v' out of range {lo}..{degree}")
            arr[v - 1] = complex(_field(e, "re", float, where), e.get("im", 0.0))
        coeffs[part] = arr
    return make_series(coeffs["a"][1:], coeffs["b"], convention, degree)


def load_series(path) -> HarmonicSeries:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CoefficientFileError(f"invalid JSON: {exc}") from None
    return series_from_dict(data)


def save_series(f: HarmonicSeries, path) -> None:
    Path(path).write_text(dumps(series_to_dict(f)) + "\n")


def complex_to_dict(z) -> dict | None:
    if z is None:
        return None
    return {"re": float(np.real(z)), "im": float(np.imag(z))}


def _plain(obj):
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (complex, np.complexfloating)):
        return complex_to_dict(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return obj


def report_to_dict(rep: ClaimReport) -> dict:
    witness = None
    if rep.witness_point is not None or rep.witness_function is not None:
        witness = {"point": complex_to_dict(rep.witness_point),
                   "function": (series_to_dict(rep.witness_function)
                                if rep.witness_function is not None else None)}
    return {
        "claim_id": rep.claim_id.value,
        "pass": bool(rep.passed),
        "extremal_value": float(rep.extremal_value),
        "witness": witness,
        "diagnostics": rep.diagnostics.to_dict() if rep.diagnostics else None,
        "details": _plain(rep.details),
    }


def params_from_dict(d: dict) -> ClassParams:
    return ClassParams.from_dict(d)
