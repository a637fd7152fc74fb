# SPDX-License-Identifier: Apache-2.0
"""Runs the CLI over the bundled fixtures and validates every emitted JSON
document against the schemas shipped in schemas/."""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def load(path: pathlib.Path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def validate(instance, schema_path: pathlib.Path, what: str):
    jsonschema.validate(instance=instance, schema=load(schema_path))
    print(f"ok: {what} conforms to {schema_path.name}")


def run_cli(cli: str, args: list[str]) -> str:
    proc = subprocess.run([cli] + args, capture_output=True, text=True)
    if proc.returncode != 0:
        sys.stderr.write(proc.stderr)
        raise SystemExit(f"CLI failed: {' '.join(args)} (exit {proc.returncode})")
    return proc.stdout


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--fixtures", required=True, type=pathlib.Path)
    ap.add_argument("--schemas", required=True, type=pathlib.Path)
    args = ap.parse_args()

    fixtures, schemas = args.fixtures, args.schemas

    # Config files bundled with the repo.
    validate(load(fixtures / "grid.json"), schemas / "heuristic_grid.schema.json", "grid.json")
    validate(load(fixtures / "mapping.json"), schemas / "class_mapping.schema.json",
             "mapping.json")

    # Single-command outputs on stdout.
    out = run_cli(args.cli, ["profile", str(fixtures / "tiny.nt")])
    validate(json.loads(out), schemas / "profile_report.schema.json", "profile stdout")

    out = run_cli(args.cli, ["classes", str(fixtures / "tiny.nt"), "--mapping",
                             str(fixtures / "mapping.json")])
    validate(json.loads(out), schemas / "class_details.schema.json", "classes stdout")

    out = run_cli(args.cli, ["sunburst", str(fixtures / "tiny.nt")])
    validate(json.loads(out), schemas / "sunburst.schema.json", "sunburst stdout")

    out = run_cli(args.cli, ["estimate", str(fixtures / "museum_a.nt"),
                             str(fixtures / "museum_b.nt"), "--gold",
                             str(fixtures / "gold_ab.nt")])
    validate(json.loads(out), schemas / "overlap_estimate.schema.json", "estimate stdout")

    # A full report run: validate the manifest itself plus every emitted JSON.
    with tempfile.TemporaryDirectory(prefix="kgprof_schema_") as tmp:
        tmpdir = pathlib.Path(tmp)
        manifest = {
            "graphs": [
                {"label": "museum_a", "dump": str(fixtures / "museum_a.nt")},
                {"label": "museum_b", "dump": str(fixtures / "museum_b.nt")},
                {"label": "tiny", "dump": str(fixtures / "tiny.nt")},
            ],
            "goldLinks": [
                {"a": "museum_a", "b": "museum_b", "files": [str(fixtures / "gold_ab.nt")]}
            ],
            "classMapping": str(fixtures / "mapping.json"),
        }
        manifest_path = tmpdir / "manifest.json"
        manifest_path.write_text(json.dumps(manifest))
        validate(manifest, schemas / "manifest.schema.json", "manifest")

        out_dir = tmpdir / "out"
        run_cli(args.cli, ["report", str(manifest_path), "--out", str(out_dir)])

        by_prefix = {
            "profile_": "profile_report.schema.json",
            "classes_": "class_details.schema.json",
            "sunburst_": "sunburst.schema.json",
            "estimate_": "overlap_estimate.schema.json",
        }
        checked = 0
        for path in sorted(out_dir.iterdir()):
            if path.suffix != ".json":
                continue
            schema = next((s for p, s in by_prefix.items() if path.name.startswith(p)), None)
            if schema is None:
                raise SystemExit(f"unexpected JSON output without a schema: {path.name}")
            validate(load(path), schemas / schema, f"report output {path.name}")
            checked += 1
        if checked < 10:  # 3 profiles + 3 sunbursts + 3 class tables + 1 estimate
            raise SystemExit(f"expected at least 10 JSON outputs, saw {checked}")

    print("all emitted JSON documents validate")


if __name__ == "__main__":
    main()
