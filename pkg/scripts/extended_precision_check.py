"""How close does the 7-term Li2(exp(-theta)) expansion get at theta = 1?

Runs the zeta-coefficient series at 40 digits so truncation is separated from
binary64 rounding, then compares with the plain exponential sum.
"""

from zetaseries.truncation import (
    decimals_correct,
    extended_direct_exp_error,
    extended_precision_error,
    measured_error,
)


def main() -> None:
    print("terms  ext-precision error  decimals   binary64 error")
    for n in (3, 5, 7, 9, 12):
        ext = extended_precision_error("dilog_exp", 1.0, n)
        b64 = measured_error("dilog_exp", 1.0, n)
        print(f"{n:5d}  {ext:19.3e}  {decimals_correct(ext):8d}   {b64:.3e}")
    print()
    print("plain sum of exp(-k)/k^2")
    for n in (10, 20, 30):
        err = extended_direct_exp_error(1.0, n)
        print(f"{n:5d}  {err:19.3e}  {decimals_correct(err):8d}")


if __name__ == "__main__":
    main()
