"""JSON Schemas for CLI reports and inputs (plain dicts; validation lives with the caller)."""

_NUM = {"type": "number"}
_COMPLEX = {
    "type": "object",
    "properties": {"re": _NUM, "im": _NUM},
    "required": ["re", "im"],
    "additionalProperties": False,
}

FAMILY = {
    "type": "object",
    "properties": {
        "family": {"enum": ["modular", "gamma0", "gamma0plus"]},
        "primes": {"type": "array", "items": {"type": "integer", "minimum": 2}},
    },
    "required": ["family"],
}

DESCRIPTOR = {
    "type": "object",
    "properties": {
        "genus": {"type": "integer", "minimum": 0},
        "cusps": {"type": "integer", "minimum": 1},
        "elliptic_orders": {"type": "array", "items": {"type": "integer", "minimum": 2}},
    },
    "required": ["genus", "cusps"],
}

ZERO_SET = {
    "oneOf": [
        {
            "type": "object",
            "properties": {
                "kind": {"const": "finite"},
                "zeros": {
                    "type": "array",
                    "minItems": 1,
                    "items": {
                        "type": "array",
                        "prefixItems": [_NUM, _NUM, {"type": "integer", "minimum": 1}],
                        "minItems": 3,
                        "maxItems": 3,
                    },
                },
            },
            "required": ["kind", "zeros"],
        },
        {
            "type": "object",
            "properties": {"kind": {"const": "progression"}, "start": _NUM, "step": {"type": "number", "exclusiveMaximum": 0}},
            "required": ["kind", "start", "step"],
        },
    ]
}

_GERM = {
    "type": "object",
    "properties": {
        "point": _NUM,
        "order": {"type": "integer"},
        "value": {"type": ["number", "null"]},
        "coeffs": {"type": "array", "items": _NUM, "minItems": 1},
    },
    "required": ["point", "order", "value", "coeffs"],
}

PHI_EVAL = {
    "type": "object",
    "properties": {"s": _COMPLEX, "value": _COMPLEX, "germ": _GERM},
    "required": ["s"],
    "oneOf": [{"required": ["value"]}, {"required": ["germ"]}],
}

_VERIFY_ROW = {
    "type": "object",
    "properties": {
        "family": FAMILY,
        "label": {"type": "string"},
        "zeros": {"type": "integer", "minimum": 0},
        "poles": {"type": "integer", "minimum": 0},
        "sign_d1": {"enum": [-1, 1]},
        "predicted_sign": {"enum": [-1, 1]},
        "germ_value": _NUM,
        "extrapolated_value": _NUM,
        "match": {"type": "boolean"},
        "divisor": {"type": "object"},
    },
    "required": ["family", "label", "zeros", "poles", "sign_d1", "predicted_sign", "germ_value",
                 "extrapolated_value", "match", "divisor"],
}

VERIFY = {
    "type": "object",
    "properties": {"rows": {"type": "array", "items": _VERIFY_ROW, "minItems": 1}, "all_match": {"type": "boolean"}},
    "required": ["rows", "all_match"],
}

MULTIPLICITIES = {
    "type": "object",
    "properties": {
        "descriptor": DESCRIPTOR,
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"n": {"type": "integer"}, "floor": {"type": "integer"}, "sine": _NUM, "agree": {"type": "boolean"}},
                "required": ["n", "floor", "sine", "agree"],
            },
        },
        "all_agree": {"type": "boolean"},
    },
    "required": ["descriptor", "rows", "all_agree"],
}

SUPERZETA_DEMO = {
    "type": "object",
    "properties": {
        "zero_set": ZERO_SET,
        "z": _COMPLEX,
        "samples": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"s": _COMPLEX, "value": _COMPLEX, "tail_error": _NUM, "terms": {"type": "integer"}},
                "required": ["s", "value", "tail_error", "terms"],
            },
        },
        "determinant": _COMPLEX,
        "cross_check": {
            "type": "object",
            "properties": {
                "method": {"enum": ["direct-product", "lerch"]},
                "reference": _COMPLEX,
                "relative_error": _NUM,
                "pass": {"type": "boolean"},
            },
            "required": ["method", "reference", "relative_error", "pass"],
        },
    },
    "required": ["zero_set", "z", "samples", "determinant", "cross_check"],
}

BY_COMMAND = {
    "phi-eval": PHI_EVAL,
    "verify": VERIFY,
    "multiplicities": MULTIPLICITIES,
    "superzeta-demo": SUPERZETA_DEMO,
}

ENVELOPE = {
    "type": "object",
    "properties": {
        "command": {"enum": list(BY_COMMAND)},
        "input": {},
        "result": {"type": "object"},
        "tolerance_profile": {"type": "string"},
        "version": {"type": "string"},
    },
    "required": ["command", "input", "result", "tolerance_profile", "version"],
    "additionalProperties": False,
}
