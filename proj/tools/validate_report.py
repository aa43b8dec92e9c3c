#!/usr/bin/env python3
"""Validate pinch-cert JSON reports against schemas/report.schema.json."""

import argparse
import json
import pathlib
import sys

import jsonschema

SCHEMA = pathlib.Path(__file__).resolve().parent.parent / "schemas" / "report.schema.json"


def floats_in(node, path="$"):
    """Paths of binary floating-point numbers anywhere in the document."""
    if isinstance(node, float):
        yield path
    elif isinstance(node, dict):
        for k, v in node.items():
            yield from floats_in(v, f"{path}.{k}")
    elif isinstance(node, list):
        for i, v in enumerate(node):
            yield from floats_in(v, f"{path}[{i}]")


def problems(doc, schema=None):
    schema = schema or json.loads(SCHEMA.read_text())
    validator = jsonschema.Draft202012Validator(schema)
    out = [f"{'/'.join(map(str, e.absolute_path)) or '$'}: {e.message}" for e in validator.iter_errors(doc)]
    out += [f"{p}: binary float in report" for p in floats_in(doc)]
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("reports", nargs="+", type=pathlib.Path)
    args = parser.parse_args()
    schema = json.loads(SCHEMA.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    bad = 0
    for path in args.reports:
        found = problems(json.loads(path.read_text()), schema)
        for p in found[:20]:
            print(f"{path}: {p}")
        bad += bool(found)
        if not found:
            print(f"{path}: ok")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
