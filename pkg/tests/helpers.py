"""Test-only oracles and shared fixtures, independent of the library's engines."""

import random

DECIMAL = {"type": "string", "pattern": "^-?[0-9]+$"}
DECIMAL_OR_NULL = {"type": ["string", "null"], "pattern": "^-?[0-9]+$"}

GEN_SCHEMA = {
    "type": "object",
    "required": ["n", "edges"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer", "minimum": 1},
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
}

CHARPOLY_SCHEMA = {
    "type": "object",
    "required": ["n", "coefficients", "pretty"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "coefficients": {"type": "array", "items": DECIMAL},
        "pretty": {"type": "string"},
    },
}

SPECTRUM_SCHEMA = {
    "type": "object",
    "required": ["n", "pairs"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "pairs": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
}

TAU_REPORT_SCHEMA = {
    "type": "object",
    "required": ["n", "edges", "methods", "agreement"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "edges": {"type": "integer", "minimum": 0},
        "methods": {
            "type": "object",
            "required": ["cofactor", "rankone", "charpoly", "bruteforce"],
            "additionalProperties": False,
            "properties": {
                "cofactor": DECIMAL_OR_NULL,
                "rankone": DECIMAL_OR_NULL,
                "charpoly": DECIMAL_OR_NULL,
                "bruteforce": DECIMAL_OR_NULL,
            },
        },
        "agreement": {"type": "boolean"},
    },
}

TAU_SINGLE_SCHEMA = {
    "type": "object",
    "required": ["n", "edges", "method", "count"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "edges": {"type": "integer", "minimum": 0},
        "method": {"enum": ["cofactor", "rankone", "charpoly", "bruteforce"]},
        "count": DECIMAL,
    },
}

VERIFY_SCHEMA = {
    "type": "object",
    "required": ["seed", "trials", "suites", "all_passed"],
    "additionalProperties": False,
    "properties": {
        "seed": {"type": "integer"},
        "trials": {"type": "integer"},
        "suites": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed", "cases", "failure"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "cases": {"type": "integer"},
                    "failure": {"type": ["string", "null"]},
                },
            },
        },
        "all_passed": {"type": "boolean"},
    },
}


def det_cofactor(rows) -> int:
    """Determinant by first-row cofactor expansion. Exponential; fine to n=6."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        sub = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * det_cofactor(sub)
        total += term if j % 2 == 0 else -term
    return total


def random_matrix_rows(rng: random.Random, n: int, lo: int = -9, hi: int = 9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
