"""JSON Schemas (draft 2020-12) for the CLI's JSON output, keyed by subcommand.

Big integers are decimal strings (``BIGINT``); small counts stay numbers.
"""

BIGINT = {"type": "string", "pattern": "^-?[0-9]+$"}
_NAMES = {"type": "array", "items": {"type": "string"}}
_PERM = {"type": "array", "items": {"type": "integer", "minimum": 1}}


def _obj(props: dict, required=None) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(required if required is not None else props),
    }


SCHEMAS = {
    "group show": _obj({
        "label": {"type": "string"},
        "order": {"type": "integer", "minimum": 1},
        "cayley": {"type": "array", "items": _PERM},
        "names": {"type": "object", "additionalProperties": _NAMES},
    }),
    "graph build": _obj({
        "monomial": {"type": "string"},
        "vertices": _NAMES,
        "edges": {"type": "array", "items": _obj({
            "label": {"type": "integer"},
            "src": {"type": "string"},
            "dst": {"type": "string"},
            "weight": {"type": "string"},
        })},
    }),
    "equiv": _obj({"equivalent": {"type": "boolean"}}),
    "ipp": _obj(
        {
            "monomial": {"type": "string"},
            "total": {"type": "integer", "minimum": 1},
            "even": {"type": "integer", "minimum": 0},
            "odd": {"type": "integer", "minimum": 0},
            "permutations": {"type": "array", "items": _PERM},
            "truncated": {"type": "boolean"},
        },
        required=["monomial", "total", "even", "odd"],
    ),
    "swan": _obj({
        "group": {"type": "string"},
        "k": {"type": "integer"},
        "n": {"type": "integer"},
        "mode": {"enum": ["exhaustive", "sample"]},
        "words": {"type": "integer"},
        "asserted": {"type": "boolean"},
        "violations": {"type": "array"},
    }),
    "identity check": _obj(
        {
            "verdict": {"type": "boolean"},
            "classes": {"type": "array", "items": _obj({
                "repr": {"type": "string"},
                "size": {"type": "integer", "minimum": 1},
                "sum": {"type": "string"},
            })},
            "oracle": {"type": "boolean"},
            "oracle_nonzero_entries": {"type": "array", "items": _PERM},
        },
        required=["verdict"],
    ),
    "al-verify": _obj({
        "group": {"type": "string"},
        "k": {"type": "integer"},
        "n": {"type": "integer"},
        "mode": {"type": "string"},
        "method": {"type": "string"},
        "words": {"type": "integer"},
        "expected_identity": {"type": "boolean"},
        "all_identity": {"type": "boolean"},
        "non_identity_words": {"type": "array"},
        "disagreements": {"type": "integer"},
    }),
    "elem-identity": _obj(
        {
            "identity": {"type": "boolean"},
            "chain": {"type": "array", "items": _NAMES},
            "witness": _PERM,
            "reduced": {"type": "string"},
            "s": {"type": "string"},
            "t": {"type": "string"},
        },
        required=["identity", "chain"],
    ),
    "codim": _obj({"k": {"type": "integer"}, "n": {"type": "integer"}, "value": BIGINT}),
    "codim table": _obj({
        "k": {"type": "integer"},
        "rows": {"type": "array", "items": {
            "type": "object",
            "properties": {"n": {"type": "integer"}},
            "required": ["n", "m"],
            "additionalProperties": BIGINT,
        }},
    }),
    "asym": _obj({
        "k": {"type": "integer"},
        "rows": {"type": "array", "items": _obj({
            "n": {"type": "integer"},
            "exact": BIGINT,
            "log_exact": {"type": "string"},
            "log_asymptotic": {"type": "string"},
            "deviation": {"type": "string"},
        })},
    }),
}
