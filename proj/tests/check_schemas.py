"""Runs the lcsgc tool and validates its JSON output against the shipped schemas."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

VARIANTS = ["mc", "mc-inc", "1c", "o1c-sync", "sigma", "sigma-l", "sigma-r", "br", "classic"]


def main() -> int:
    tool, schema_dir = sys.argv[1], sys.argv[2]
    schemas = {}
    for name in ("instance", "report", "error"):
        with open(os.path.join(schema_dir, f"{name}.schema.json")) as f:
            schemas[name] = json.load(f)
            jsonschema.Draft202012Validator.check_schema(schemas[name])

    def run(*args, expect=0):
        proc = subprocess.run([tool, *args], capture_output=True, text=True)
        if proc.returncode != expect:
            raise SystemExit(f"{args}: exit {proc.returncode}\n{proc.stdout}{proc.stderr}")
        return json.loads(proc.stdout)

    checked = 0
    with tempfile.TemporaryDirectory() as tmp:
        for variant in VARIANTS:
            for seed in range(1, 4):
                instance = run("gen", "--seed", str(seed), "--variant", variant, "-m", "7", "-n", "6", "--sigma", "3")
                jsonschema.validate(instance, schemas["instance"])
                path = os.path.join(tmp, f"{variant}-{seed}.json")
                with open(path, "w") as f:
                    json.dump(instance, f)
                flags = ["--json", "--stats", "--witness"]
                if variant == "br":
                    flags.append("--approx")
                jsonschema.validate(run("solve", "--input", path, *flags), schemas["report"])
                jsonschema.validate(run("oracle", "--input", path, "--json"), schemas["report"])
                checked += 3

        text = os.path.join(tmp, "text.json")
        with open(text, "w") as f:
            json.dump({"v": "abcab", "w": "bacb", "variant": "sigma", "left": {"a": [0, 2]}, "right": {"b": [1, 3]}}, f)
        jsonschema.validate(run("solve", "--input", text, "--json", "--algorithm", "rmq"), schemas["report"])
        bad = os.path.join(tmp, "bad.json")
        with open(bad, "w") as f:
            json.dump({"v": "ab", "w": "ab", "variant": "1c", "gaps": [[0, 1]]}, f)
        jsonschema.validate(run("solve", "--input", bad, "--json", "--algorithm", "rmq", expect=2), schemas["error"])
        checked += 2

    print(f"validated {checked} documents")
    return 0


if __name__ == "__main__":
    sys.exit(main())
