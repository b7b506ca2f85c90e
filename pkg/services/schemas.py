import logging
from typing import Any, Dict

from jsonschema import ValidationError, validate

logger = logging.getLogger(__name__)

POLYNOMIAL_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["var", "terms"],
    "additionalProperties": False,
    "properties": {
        "var": {"type": "string"},
        "terms": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [
                    {"type": "integer"},
                    {"type": "string", "pattern": "^-?[1-9][0-9]*$"},
                ],
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
}

IGUSA_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["n_vars", "basis", "coeffs"],
    "additionalProperties": False,
    "properties": {
        "n_vars": {"type": "integer", "minimum": 0},
        "basis": {"const": "e"},
        "coeffs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["K", "poly"],
                "properties": {
                    "K": {"type": "array", "items": {"type": "integer", "minimum": 1}, "uniqueItems": True},
                    "poly": POLYNOMIAL_SCHEMA,
                },
            },
        },
    },
}

REPORT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["claim", "instances_checked", "vacuous", "failures", "verified"],
    "properties": {
        "claim": {"type": "string"},
        "instances_checked": {"type": "integer", "minimum": 0},
        "vacuous": {"type": "integer", "minimum": 0},
        "verified": {"type": "boolean"},
        "failures": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["J", "lhs", "rhs"],
                "properties": {
                    "J": {"type": "array", "items": {"type": "integer"}},
                    "lhs": {"anyOf": [{"type": "null"}, POLYNOMIAL_SCHEMA]},
                    "rhs": {"anyOf": [{"type": "null"}, POLYNOMIAL_SCHEMA]},
                    "context": {"type": "object"},
                },
            },
        },
        "details": {"type": "object"},
    },
}

ALPHA_TABLE_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["spec", "method", "rows"],
    "properties": {
        "spec": {"type": "string"},
        "method": {"type": "string"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["J"],
                "properties": {
                    "J": {"type": "array", "items": {"type": "integer", "minimum": 1}, "uniqueItems": True},
                    "a": POLYNOMIAL_SCHEMA,
                    "alpha": POLYNOMIAL_SCHEMA,
                    "count": {"type": "integer", "minimum": 0},
                },
            },
        },
    },
}

SCHEMAS = {
    'alpha_table': ALPHA_TABLE_SCHEMA,
    'polynomial': POLYNOMIAL_SCHEMA,
    'igusa': IGUSA_SCHEMA,
    'report': REPORT_SCHEMA,
}


def validate_json(kind: str, data: Any) -> None:
    """Raise jsonschema.ValidationError when data does not match the named schema"""
    if kind not in SCHEMAS:
        raise ValueError(f"Unknown schema {kind}. Supported schemas: {', '.join(SCHEMAS)}")
    try:
        validate(instance=data, schema=SCHEMAS[kind])
    except ValidationError as e:
        logger.error(f"Error validating {kind} JSON: {e.message}")
        raise
