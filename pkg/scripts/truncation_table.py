"""Terms needed by every series at a few points and tolerances."""

from zetaseries.truncation import MAX_TERMS, terms_needed

CASES = [
    ("log_sinc", 0.25), ("log_sinc", 0.75), ("sin_over_k2", 1.0), ("sin_over_k2", 5.0),
    ("dilog_exp", 1.0), ("dilog_exp", 5.0), ("cos_rep", 0.4), ("tan_rep", 0.4),
    ("gamma_pair", 0.5), ("log_series", 2.0), ("log_series", 10.0), ("log_gamma_series", 0.5),
]
TOLS = (1e-6, 1e-10, 1e-14)


def main() -> None:
    print(f"{'series':18s}{'point':>7s}" + "".join(f"{t:>9.0e}" for t in TOLS))
    for name, point in CASES:
        cells = []
        for tol in TOLS:
            n = terms_needed(name, point, tol).terms_needed
            cells.append(f"{n:>9d}" if n else f"{'>' + str(MAX_TERMS):>9s}")
        print(f"{name:18s}{point:7.2f}" + "".join(cells))


if __name__ == "__main__":
    main()
