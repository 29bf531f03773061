"""Regenerate the bundled synthetic corpus, word list and relation resource."""
import argparse
from pathlib import Path

from lxper.synthetic import SyntheticSpec, write_synthetic

DEFAULT_DIR = Path(__file__).resolve().parents[1] / "src" / "lxper" / "data" / "synthetic"

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(DEFAULT_DIR))
    ap.add_argument("--seed", type=int, default=SyntheticSpec.seed)
    ap.add_argument("--texts-per-grade", type=int, default=SyntheticSpec.texts_per_grade)
    a = ap.parse_args()
    d = write_synthetic(a.out, SyntheticSpec(seed=a.seed, texts_per_grade=a.texts_per_grade))
    print(f"wrote {d}")
