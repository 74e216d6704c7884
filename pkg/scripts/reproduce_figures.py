"""Write the CSV data behind the log-sinc and log-series figures.

    python3 scripts/reproduce_figures.py --outdir figures_out
"""

import argparse
from pathlib import Path

from zetaseries import cli

FIGURE_ARGS = {
    "log_sinc": ["--range", "-0.9:0.9", "--samples", "181"],
    "log_series": ["--range", "0.2:5", "--samples", "97"],
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--outdir", type=Path, default=Path("figures_out"))
    parser.add_argument("--terms", default="1,2,3")
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for figure, extra in FIGURE_ARGS.items():
        path = args.outdir / f"{figure}.csv"
        code = cli.main(["plotdata", figure, *extra, "--terms", args.terms, "-o", str(path)])
        if code:
            return code
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
