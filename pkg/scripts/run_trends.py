"""Run the three random-graph trend sweeps and print per-cell means.

The sweeps track how the lower bounds grow with graph size, degree,
and edge count.  Ceilings quantize hard at desk scale, so the verdict
lines report monotonicity of both the exact rational means and the
ceiling means.
"""

import argparse
import sys
from fractions import Fraction

from boxkit.harness import ExperimentConfig, emit, format_summary, run_experiment


def trend_configs(master_seed, seeds):
    return (
        ("gnp-growth", "n", ExperimentConfig(
            model="gnp", n_values=(12, 16, 20), seeds=seeds,
            master_seed=master_seed, bounds=("strong_boundary",),
            p_values=(Fraction(1, 2),))),
        ("regular-degree", "k", ExperimentConfig(
            model="regular", n_values=(200,), seeds=seeds,
            master_seed=master_seed, bounds=("spectral",),
            k_values=(3, 5, 8))),
        ("gnm-density", "m", ExperimentConfig(
            model="gnm", n_values=(16,), seeds=seeds,
            master_seed=master_seed, bounds=("strong_boundary",),
            m_values=(32, 48, 64))),
    )


def verdict(label, series):
    clean = [x for x in series if x is not None]
    if len(clean) < len(series):
        return f"  {label}: insufficient data"
    direction = ("strictly increasing"
                 if all(a < b for a, b in zip(clean, clean[1:]))
                 else "nondecreasing"
                 if all(a <= b for a, b in zip(clean, clean[1:]))
                 else "NOT monotone")
    shown = ", ".join(f"{float(x):.4f}" for x in clean)
    return f"  {label}: [{shown}] {direction}"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--master-seed", type=int, default=42)
    parser.add_argument("--seeds", type=int, default=20,
                        help="samples per grid cell")
    parser.add_argument("--out-dir", default=None,
                        help="also write one CSV per sweep here")
    args = parser.parse_args(argv)

    for name, axis, config in trend_configs(args.master_seed, args.seeds):
        result = run_experiment(config)
        print(f"== {name} (trend axis: {axis}) ==")
        sys.stdout.write(format_summary(result.cells))
        bound = config.bounds[0]
        values = [cell.mean_values[bound] for cell in result.cells]
        ceilings = [cell.mean_ceilings[bound] for cell in result.cells]
        print(verdict("mean values  ", values))
        print(verdict("mean ceilings", ceilings))
        if args.out_dir is not None:
            path = f"{args.out_dir}/{name}.csv"
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(emit(result.rows, "csv"))
            print(f"  wrote {path}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
