"""Regenerate the bundled 10^4-operation scripts in tests/data."""
from pathlib import Path

from toptree.workload import WorkloadConfig, generate

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
SCRIPTS = {
    "metric_10k.txt": WorkloadConfig(profile="metric", n=256, ops=10_000, seed=1),
    "pathweights_10k.txt": WorkloadConfig(profile="pathweights", n=256, ops=10_000, seed=2),
}


def main():
    DATA.mkdir(exist_ok=True)
    for name, cfg in SCRIPTS.items():
        (DATA / name).write_text("\n".join(generate(cfg)) + "\n")
        print(f"wrote {DATA / name}")


if __name__ == "__main__":
    main()
