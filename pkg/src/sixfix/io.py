"""JSON encoding, schema validation and scenario parsing."""

from __future__ import annotations

import json
import re

import jsonschema

from sixfix.forms import CubicData
from sixfix.torus import (
    DiagonalAction,
    FixedLocusReport,
    Hypersurface,
    MonomialCurve,
    ProjectiveSpace,
)

SAFE_INT = 2**53 - 1
_INT_RE = re.compile(r"^-?[0-9]+$")


class InputError(ValueError):
    """Malformed or schema-violating input; ``path`` locates the offending field."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


def json_int(v: int):
    return v if -SAFE_INT <= v <= SAFE_INT else str(v)


def parse_int(v, path: str = "") -> int:
    if isinstance(v, bool):
        raise InputError(f"expected an integer, got {v!r}", path)
    if isinstance(v, int):
        return v
    if isinstance(v, str) and _INT_RE.match(v):
        return int(v)
    raise InputError(f"expected an integer or decimal string, got {v!r}", path)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def loads(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}", source) from exc


def _validate(obj, schema) -> None:
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(obj), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        path = "$" + "".join(f"[{p!r}]" if isinstance(p, str) else f"[{p}]" for p in err.absolute_path)
        raise InputError(err.message, path)


# ---------------------------------------------------------------------------
# cubic forms

_BIGINT = {"anyOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?[0-9]+$"}]}

CUBIC_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["a0", "a1", "a2", "a3"],
    "properties": {
        "a0": _BIGINT,
        "a1": _BIGINT,
        "a2": _BIGINT,
        "a3": _BIGINT,
        "c1": {"type": "array", "items": _BIGINT, "minItems": 2, "maxItems": 2},
        "delta": _BIGINT,
        "cube_zero_class": {"anyOf": [{"type": "null"}, {"type": "array", "items": _BIGINT, "minItems": 2, "maxItems": 2}]},
    },
}


def cubic_to_json(c: CubicData, c1=None) -> dict:
    out = {f"a{i}": json_int(v) for i, v in enumerate(c.as_tuple())}
    if c1 is not None:
        out["c1"] = [json_int(v) for v in c1]
    return out


def cubic_from_json(obj) -> tuple[CubicData, tuple[int, int] | None, dict]:
    """Parse a cubic object; also returns any recorded derived values for re-checking."""
    _validate(obj, CUBIC_SCHEMA)
    c = CubicData(*(parse_int(obj[f"a{i}"], f"$['a{i}']") for i in range(4)))
    c1 = tuple(parse_int(v, "$['c1']") for v in obj["c1"]) if "c1" in obj else None
    recorded = {k: obj[k] for k in ("delta", "cube_zero_class") if k in obj}
    return c, c1, recorded


# ---------------------------------------------------------------------------
# torus scenarios

_WEIGHT = {"anyOf": [{"type": "integer"}, {"type": "array", "items": {"type": "integer"}, "minItems": 1}]}

SCENARIO_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["ambient", "weights"],
    "properties": {
        "comment": {"type": "string"},
        "ambient": {
            "type": "object",
            "additionalProperties": False,
            "required": ["type", "dims"],
            "properties": {
                "type": {"enum": ["P", "product", "hypersurface"]},
                "dims": {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1},
                "equation": {
                    "type": "array",
                    "minItems": 1,
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["coeff", "exponents"],
                        "properties": {
                            "coeff": {"type": "integer"},
                            "exponents": {
                                "type": "array",
                                "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                            },
                        },
                    },
                },
            },
        },
        "weights": {"type": "array", "minItems": 1, "items": {"anyOf": [_WEIGHT, {"type": "array", "items": _WEIGHT}]}},
        "curve": {
            "anyOf": [
                {"type": "array", "items": {"type": "integer", "minimum": 0}},
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["exponents"],
                    "properties": {
                        "exponents": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                        "coefficients": {"type": "array", "items": {"type": "integer"}},
                    },
                },
            ]
        },
        "expected_chi": {"type": "integer"},
    },
}

WRAPPED_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["scenario"],
    "properties": {"scenario": {"type": "object"}, "report": {"type": "object"}, "euler_consistent": {"type": "boolean"}},
}


class Scenario:
    """A parsed torus scenario: action, ambient, optional curve and Euler target."""

    def __init__(self, raw: dict):
        _validate(raw, SCENARIO_SCHEMA)
        self.raw = raw
        amb = raw["ambient"]
        dims = tuple(amb["dims"])
        kind = amb["type"]
        if kind == "P" and len(dims) != 1:
            raise InputError("type P takes exactly one dimension", "$['ambient']['dims']")
        if kind == "product" and len(dims) < 2:
            raise InputError("type product takes at least two dimensions", "$['ambient']['dims']")
        if kind == "hypersurface" and "equation" not in amb:
            raise InputError("hypersurface ambient needs an equation", "$['ambient']")
        if kind != "hypersurface" and "equation" in amb:
            raise InputError("only hypersurface ambients take an equation", "$['ambient']['equation']")
        self.action = _parse_weights(raw["weights"], dims)
        if kind == "hypersurface":
            try:
                terms = tuple((t["coeff"], tuple(tuple(e) for e in t["exponents"])) for t in amb["equation"])
                self.ambient = Hypersurface(dims, terms)
            except ValueError as exc:
                raise InputError(str(exc), "$['ambient']['equation']") from exc
        else:
            self.ambient = ProjectiveSpace(dims)
        self.curve = None
        if "curve" in raw:
            cv = raw["curve"]
            if isinstance(cv, list):
                cv = {"exponents": cv}
            if len(dims) != 1 or len(cv["exponents"]) != dims[0] + 1:
                raise InputError("curve needs one exponent per coordinate of a single projective space", "$['curve']")
            if "coefficients" in cv and len(cv["coefficients"]) != len(cv["exponents"]):
                raise InputError("coefficients and exponents differ in length", "$['curve']")
            try:
                self.curve = MonomialCurve(tuple(cv["exponents"]), tuple(cv["coefficients"]) if "coefficients" in cv else None)
            except ValueError as exc:
                raise InputError(str(exc), "$['curve']") from exc
        self.expected_chi = raw.get("expected_chi")

    @property
    def dimension(self) -> int:
        return self.ambient.dimension


def _parse_weights(weights: list, dims: tuple[int, ...]) -> DiagonalAction:
    # a one-factor ambient may give its weights flat or nested as [[w0, ..., wN]]
    if len(dims) == 1 and len(weights) == dims[0] + 1:
        factors = [weights]
    else:
        factors = weights
    if len(factors) != len(dims):
        raise InputError(f"expected weights for {len(dims)} factor(s)", "$['weights']")
    for f, (fw, n) in enumerate(zip(factors, dims)):
        if not isinstance(fw, list) or len(fw) != n + 1:
            raise InputError(f"factor P^{n} needs {n + 1} weights", f"$['weights'][{f}]")
    try:
        return DiagonalAction.on_product(factors)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc), "$['weights']") from exc


def load_scenario(obj) -> tuple[Scenario, dict | None]:
    """Accept a bare scenario or a previously emitted ``{"scenario", "report"}`` wrapper."""
    if isinstance(obj, dict) and "scenario" in obj:
        _validate(obj, WRAPPED_SCHEMA)
        return Scenario(obj["scenario"]), obj.get("report")
    if not isinstance(obj, dict):
        raise InputError("scenario must be a JSON object", "$")
    return Scenario(obj), None


def _weight_json(w):
    return w[0] if len(w) == 1 else list(w)


def report_to_json(report: FixedLocusReport) -> dict:
    return {
        "isolated": report.isolated,
        "count": report.count,
        "isolated_points": [
            {
                "coords": [list(v) for v in p.coords] if p.coords is not None else None,
                "tangent_weights": [_weight_json(w) for w in p.tangent_weights],
                "label": p.label,
                "multiplicity": p.multiplicity,
            }
            for p in report.isolated_points
        ],
        "positive_dim_components": [
            {"supports": [list(s) for s in c.supports], "dim": c.dim, "note": c.note}
            for c in report.positive_dim_components
        ],
        "notes": list(report.notes),
    }
