"""JSON Schemas (draft 2020-12) for ``--json`` output, keyed by subcommand."""

from __future__ import annotations

_INT = {"type": "integer"}
_INTS = {"type": "array", "items": _INT}
_NULLABLE_INT = {"type": ["integer", "null"]}
_COEFFS = {"type": "array", "items": _INT}


def _obj(props: dict, required: list[str] | None = None) -> dict:
    return {"type": "object", "properties": props,
            "required": list(props) if required is None else required,
            "additionalProperties": False}


FAMILY = _obj({"sequence": _INTS, "interpolant": _COEFFS, "modulus": _COEFFS})

STATUS = {"oneOf": [
    _obj({"kind": {"const": "nilpotent"}, "index": {"type": "integer", "minimum": 1}}),
    _obj({"kind": {"const": "periodic"}, "preperiod": {"type": "integer", "minimum": 0},
          "cycle": {**_INTS, "minItems": 1}}),
    _obj({"kind": {"const": "divergent"}, "escape_step": {"type": "integer", "minimum": 0},
          "bound": {"type": "integer", "minimum": 0}}),
]}

ORBIT = _obj({"start": _INT, "values": _INTS, "differences": _INTS, "status": STATUS})

FORM = _obj({"form": {"type": "integer", "minimum": 1, "maximum": 7}, "S": _INT, "R": _INT,
             "eps": {"enum": [1, -1]}}, required=["form", "S"])

CHECK = _obj({"poly": {"type": "string"}, "start": _INT, "nilpotent": {"type": "boolean"},
              "index": _NULLABLE_INT, "status": {"enum": ["nilpotent", "periodic", "divergent"]}})

ENUMERATE = {"oneOf": [
    _obj({"start": _INT, "sequences": {"type": "array", "items": _INTS},
          "families": {"type": "array", "items": FAMILY},
          "max_index_found": _INT, "nodes_explored": _INT},
         required=["start", "sequences", "max_index_found", "nodes_explored"]),
    _obj({"start": {"const": 0}, "index_1": {"type": "string"}, "index_2": {"type": "string"},
          "max_index": {"const": 2}}),
]}

CLASSIFY = _obj({
    "poly": {"type": "string"}, "start": _INT, "bounded": {"type": "boolean"},
    "orbit": {"oneOf": [{"type": "null"}, _obj({"preperiod": _INTS, "cycle": _INTS})]},
    "form": {"oneOf": [{"type": "null"}, FORM]},
})

WITNESS = _obj({"form": FORM, "witness": _COEFFS, "text": {"type": "string"}})

RECURRING = _obj({"kind": {"enum": ["one-zero-tail", "alternating-zero"]}, "m": _INT, "prefix": _INTS,
                  "value": _NULLABLE_INT, "realizable": {"type": "boolean"},
                  "witness": {"oneOf": [{"type": "null"}, _COEFFS]}})

VERIFY = _obj({"suite": {"type": "string"}, "passed": {"type": "boolean"},
               "checks": {"type": "array", "items": _obj({
                   "suite": {"type": "string"}, "item": {"type": "string"},
                   "passed": {"type": "boolean"}, "detail": {"type": "string"}})}})

_COUNTEREXAMPLE = _obj({"poly": _COEFFS, "r": _INT, "preperiod": _INTS, "cycle": _INTS})

SCAN = _obj({
    "deg_max": _INT, "coeff_max": _INT, "r_lo": _INT, "r_hi": _INT,
    "polynomials": _INT, "orbits": _INT, "unbounded": _INT, "bounded": _INT,
    "form_counts": {"type": "object", "propertyNames": {"pattern": "^[1-7]$"},
                    "additionalProperties": _INT},
    "counterexamples": {"type": "array", "items": _COUNTEREXAMPLE},
})

SCHEMAS = {
    "check": CHECK,
    "orbit": ORBIT,
    "enumerate": ENUMERATE,
    "classify": CLASSIFY,
    "witness": WITNESS,
    "recurring": RECURRING,
    "verify": VERIFY,
    "scan": SCAN,
}
