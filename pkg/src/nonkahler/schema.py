"""JSON Schema (draft 2020-12) for the documents written by the CLI."""

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+/[1-9][0-9]*$"}
POLY = {"type": "array", "items": {"type": "integer"}}
INTERVAL = {
    "type": "object",
    "required": ["lo", "hi", "poly"],
    "properties": {"lo": RATIONAL, "hi": RATIONAL, "poly": POLY},
    "additionalProperties": False,
}
STRINGS = {"type": "array", "items": {"type": "string"}}
VERDICT = {"enum": ["pass", "fail"]}
MULTIPLICITIES = {"type": "object", "patternProperties": {"^[1-9][0-9]*$": {"type": "integer"}},
                  "additionalProperties": False}

MATRIX_ECHO = {
    "type": "object",
    "required": ["text", "canonical", "entries", "traceNormSquared"],
    "properties": {
        "text": {"type": "string"},
        "canonical": {"type": "string"},
        "entries": {"type": "array", "minItems": 2, "maxItems": 2,
                    "items": {"type": "array", "minItems": 2, "maxItems": 2,
                              "items": {"type": "string"}}},
        "traceNormSquared": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

CERTIFICATE = {
    "type": "object",
    "required": ["input", "traceNormSquared", "charPolyH2", "nonCyclotomicFactor",
                 "witnessRoot", "conclusion"],
    "properties": {
        "input": {"type": "string"},
        "traceNormSquared": {"type": "integer", "minimum": 5},
        "charPolyH2": POLY,
        "nonCyclotomicFactor": POLY,
        "witnessRoot": INTERVAL,
        "conclusion": {"type": "string"},
    },
    "additionalProperties": False,
}

JUMP_LOCI = {
    "type": "object",
    "required": ["characterTorusRank", "component", "charPolyEven", "cyclotomicPart",
                 "cyclotomicMultiplicities", "nonCyclotomicFactor", "inversionClosed",
                 "nonUnitaryPoints"],
    "properties": {
        "characterTorusRank": {"const": 2},
        "component": {"type": "string"},
        "charPolyEven": POLY,
        "cyclotomicPart": POLY,
        "cyclotomicMultiplicities": MULTIPLICITIES,
        "nonCyclotomicFactor": POLY,
        "inversionClosed": {"type": "boolean"},
        "nonUnitaryPoints": {"type": "array", "items": INTERVAL},
    },
    "additionalProperties": False,
}

_COMMON = ["schemaVersion", "command", "normalizationNotes", "warnings"]

ANALYZE = {
    "type": "object",
    "required": _COMMON + ["input", "settings", "monodromy", "betti", "mappingTorus", "lefschetz",
                           "formality", "certificate", "jumpLoci", "remarks"],
    "properties": {
        "schemaVersion": {"const": "1.0"},
        "command": {"const": "analyze"},
        "input": MATRIX_ECHO,
        "settings": {
            "type": "object",
            "required": ["refineWidth", "divisorScale", "torusScale"],
            "properties": {"refineWidth": RATIONAL,
                           "divisorScale": {"type": "integer", "minimum": 1},
                           "torusScale": {"type": "integer", "minimum": 1}},
            "additionalProperties": False,
        },
        "monodromy": {
            "type": "object",
            "required": ["realifiedCharPoly", "cycleType", "permutationCharPoly", "exteriorCharPoly",
                         "h2CharPoly", "cyclotomicPart", "cyclotomicMultiplicities",
                         "nonCyclotomicFactor", "unitModulusCount", "semisimpleAtOne",
                         "formPreserved"],
            "properties": {
                "realifiedCharPoly": POLY, "cycleType": POLY, "permutationCharPoly": POLY,
                "exteriorCharPoly": POLY, "h2CharPoly": POLY, "cyclotomicPart": POLY,
                "cyclotomicMultiplicities": MULTIPLICITIES, "nonCyclotomicFactor": POLY,
                "unitModulusCount": {"type": "integer"},
                "semisimpleAtOne": {"type": "boolean"}, "formPreserved": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
        "betti": {"type": "array", "items": {"type": "integer", "minimum": 0},
                  "minItems": 7, "maxItems": 7},
        "mappingTorus": {
            "type": "object",
            "required": ["betti", "kernelDims", "cokernelDims", "fixedDim"],
            "properties": {"betti": POLY, "kernelDims": POLY, "cokernelDims": POLY,
                           "fixedDim": {"type": "integer"}},
            "additionalProperties": False,
        },
        "lefschetz": {
            "type": "object",
            "required": ["verdict", "d", "thetaCoordinates", "maps"],
            "properties": {
                "verdict": VERDICT,
                "d": RATIONAL,
                "thetaCoordinates": {"type": "array", "items": RATIONAL},
                "maps": {"type": "array", "items": {
                    "type": "object",
                    "required": ["j", "sourceDegree", "targetDegree", "sourceDim", "targetDim",
                                 "rank", "isomorphism"],
                    "properties": {k: {"type": "integer"} for k in
                                   ("j", "sourceDegree", "targetDegree", "sourceDim",
                                    "targetDim", "rank")} | {"isomorphism": {"type": "boolean"}},
                    "additionalProperties": False,
                }},
            },
            "additionalProperties": False,
        },
        "formality": {
            "type": "object",
            "required": ["verdict", "b1IsOne", "s2Isomorphisms", "semisimpleAtOne", "justification"],
            "properties": {
                "verdict": VERDICT,
                "b1IsOne": {"type": "boolean"},
                "s2Isomorphisms": {"type": "array", "items": {"type": "boolean"},
                                   "minItems": 3, "maxItems": 3},
                "semisimpleAtOne": {"type": "boolean"},
                "justification": STRINGS,
            },
            "additionalProperties": False,
        },
        "certificate": CERTIFICATE,
        "jumpLoci": JUMP_LOCI,
        "normalizationNotes": STRINGS,
        "remarks": STRINGS,
        "warnings": STRINGS,
    },
    "additionalProperties": False,
}

CERTIFY = {
    "type": "object",
    "required": _COMMON + ["input", "certificate"],
    "properties": {
        "schemaVersion": {"const": "1.0"}, "command": {"const": "certify"},
        "input": MATRIX_ECHO, "certificate": CERTIFICATE,
        "normalizationNotes": STRINGS, "warnings": STRINGS,
    },
    "additionalProperties": False,
}

COMPARE = {
    "type": "object",
    "required": _COMMON + ["inputs", "verdict", "message", "ordering", "factors", "transcript", "notes"],
    "properties": {
        "schemaVersion": {"const": "1.0"}, "command": {"const": "compare"},
        "inputs": {"type": "array", "items": MATRIX_ECHO, "minItems": 2, "maxItems": 2},
        "verdict": {"enum": ["Distinct", "InconclusiveEqualRadii"]},
        "message": {"type": "string"},
        "ordering": {"enum": ["less", "equal", "greater"]},
        "factors": {"type": "array", "items": POLY, "minItems": 2, "maxItems": 2},
        "transcript": STRINGS, "notes": STRINGS,
        "normalizationNotes": STRINGS, "warnings": STRINGS,
    },
    "additionalProperties": False,
}

ENUMERATE = {
    "type": "object",
    "required": _COMMON + ["height", "count", "groupCount", "members", "groups"],
    "properties": {
        "schemaVersion": {"const": "1.0"}, "command": {"const": "enumerate"},
        "height": {"type": "integer", "minimum": 1},
        "count": {"type": "integer"}, "groupCount": {"type": "integer"},
        "members": {"type": "array", "items": {
            "type": "object",
            "required": ["matrix", "traceNormSquared", "nonCyclotomicFactor", "witnessRoot"],
            "properties": {"matrix": {"type": "string"},
                           "traceNormSquared": {"type": "integer", "minimum": 5},
                           "nonCyclotomicFactor": POLY, "witnessRoot": INTERVAL},
            "additionalProperties": False,
        }},
        "groups": {"type": "array", "items": {
            "type": "object",
            "required": ["nonCyclotomicFactor", "members"],
            "properties": {"nonCyclotomicFactor": POLY, "members": STRINGS},
            "additionalProperties": False,
        }},
        "normalizationNotes": STRINGS, "warnings": STRINGS,
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "nonkahler report",
    "oneOf": [ANALYZE, CERTIFY, COMPARE, ENUMERATE],
}
