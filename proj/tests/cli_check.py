"""Run the pconf executable twice, check the exit code, byte-identical
output and (when a schema path is given) JSON schema conformance.

usage: cli_check.py BIN SCHEMA|- EXPECTED_RC ARGS...
"""
import json
import subprocess
import sys


def run(binary, args):
    p = subprocess.run([binary, *args], capture_output=True)
    return p.returncode, p.stdout


def main():
    binary, schema_path, expected = sys.argv[1], sys.argv[2], int(sys.argv[3])
    args = sys.argv[4:]
    rc, out = run(binary, args)
    if rc != expected:
        print(f"exit code {rc}, expected {expected}")
        return 1
    rc2, out2 = run(binary, args)
    if rc2 != rc or out2 != out:
        print("second run differs")
        return 1
    if schema_path != "-":
        import jsonschema

        with open(schema_path) as f:
            schema = json.load(f)
        jsonschema.validate(json.loads(out), schema)
    print(f"ok: rc={rc}, {len(out)} bytes")
    return 0


if __name__ == "__main__":
    sys.exit(main())
