"""Regenerate tests/golden/*.json (root system plus component table per type)."""
import json
import pathlib

from shivariety import enumerate_admitted, root_system

TYPES = ["A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "G2", "F4"]
OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"


def document(label: str) -> dict:
    rs = root_system(label)
    return {
        "root_system": rs.to_dict(),
        "components": enumerate_admitted(rs, with_representatives=True).to_dict(),
    }


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for label in TYPES:
        path = OUT / f"{label}.json"
        path.write_text(json.dumps(document(label), separators=(",", ":")) + "\n")
        print(path.name, path.stat().st_size)


if __name__ == "__main__":
    main()
