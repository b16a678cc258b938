"""Validate example problem files against the problem schema."""

import json
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed")
    sys.exit(77)

schema_path, *problems = sys.argv[1:]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

failed = False
for path in problems:
    with open(path) as f:
        doc = json.load(f)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    for e in errors:
        print(f"{path}: /{'/'.join(map(str, e.absolute_path))}: {e.message}")
    failed |= bool(errors)

bad = {"ring": {"vars": ["x"]}, "objects": {}, "tasks": []}
if validator.is_valid(bad):
    print("schema accepts a ring without a field")
    failed = True
sys.exit(1 if failed else 0)
