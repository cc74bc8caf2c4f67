"""Rewrite the golden CLI outputs shipped with the package."""

from pathlib import Path

from mcg_forge.cli import golden_outputs

TARGET = Path(__file__).resolve().parents[1] / "src" / "mcg_forge" / "golden"

if __name__ == "__main__":
    TARGET.mkdir(exist_ok=True)
    for name, text in golden_outputs().items():
        (TARGET / name).write_text(text)
        print("wrote", name)
