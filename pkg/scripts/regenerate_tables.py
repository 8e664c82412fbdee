"""Write every weight table and plot dataset to a directory.

    python scripts/regenerate_tables.py out/ --max-k 12
"""

import argparse
from fractions import Fraction

from credit_weights.report import DEFAULT_MU_VALUES, ReportConfig, write_artifacts


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("out_dir")
    parser.add_argument("--max-k", type=int, default=10)
    parser.add_argument("--fig1-max-k", type=int, default=10)
    parser.add_argument("--mu", type=Fraction, action="append",
                        help="floor for the alpha-bound plot (repeatable)")
    parser.add_argument("--fig2-k", type=int, default=5)
    parser.add_argument("--fig2-alpha", type=Fraction, default=Fraction(1, 20))
    args = parser.parse_args()

    config = ReportConfig(
        max_k=args.max_k,
        fig1_k=range(2, args.fig1_max_k + 1),
        mu_values=tuple(args.mu) if args.mu else DEFAULT_MU_VALUES,
        fig2_k=args.fig2_k,
        fig2_alpha=args.fig2_alpha,
    )
    for path in write_artifacts(args.out_dir, config):
        print(path)


if __name__ == "__main__":
    main()
