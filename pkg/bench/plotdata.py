"""Plot coordinates from mmin.csv.

mode eps:      inv_eps_sq, M_min                     for one fixed n
mode players:  n, ln_M_min, ln_theoretical_M         for one fixed eps

Rows whose M_min is CAP have no coordinate and are skipped with a warning.
"""

import csv
import math
import sys
from typing import Optional, TextIO

from core.exceptions import InvalidParameterError, UsageException
from core.logger import get_logger
from bench.experiment import CAP, MMIN_HEADER, format_real

logger = get_logger(__name__)

PLOT_MODES = ("eps", "players")


def read_mmin(path: str) -> list[dict[str, str]]:
    """Rows of an mmin.csv file as dicts keyed by header.

    Raises:
      InvalidParameterError: If the header does not match the mmin layout.
    """
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != MMIN_HEADER:
            raise InvalidParameterError(
                f"{path}: expected header {','.join(MMIN_HEADER)}, got {reader.fieldnames}"
            )
        return list(reader)


def _same_eps(text: str, eps: float) -> bool:
    return math.isclose(float(text), eps, rel_tol=1e-9, abs_tol=0.0)


def plot_rows(
    rows: list[dict[str, str]],
    mode: str,
    n: Optional[int] = None,
    eps: Optional[float] = None,
) -> tuple[list[str], list[list[str]]]:
    """Header and coordinate rows for the requested mode.

    Raises:
      UsageException: On an unknown mode or a missing fixed value.
      InvalidParameterError: If the fixed n or eps does not occur in `rows`.
    """
    if mode == "eps":
        if n is None:
            raise UsageException("--mode eps needs --n")
        selected = [r for r in rows if int(r["n"]) == n]
        if not selected:
            raise InvalidParameterError(f"n={n} does not occur in the input")
        header = ["inv_eps_sq", "M_min"]
    elif mode == "players":
        if eps is None:
            raise UsageException("--mode players needs --eps")
        selected = [r for r in rows if _same_eps(r["eps"], eps)]
        if not selected:
            raise InvalidParameterError(f"eps={eps} does not occur in the input")
        header = ["n", "ln_M_min", "ln_theoretical_M"]
    else:
        raise UsageException(f"unknown plot mode {mode!r}, expected one of {PLOT_MODES}")

    out = []
    for row in selected:
        if row["M_min"] == CAP:
            logger.warning("跳过达到上限的行", extra={"n": row["n"], "eps": row["eps"]})
            continue
        if mode == "eps":
            out.append([row["inv_eps_sq"], row["M_min"]])
        else:
            out.append([
                row["n"],
                format_real(math.log(int(row["M_min"]))),
                format_real(math.log(int(row["theoretical_M"]))),
            ])
    if mode == "eps":
        out.sort(key=lambda r: float(r[0]))
    else:
        out.sort(key=lambda r: int(r[0]))
    return header, out


def cmd_plotdata(
    mmin_path: str,
    mode: str,
    n: Optional[int] = None,
    eps: Optional[float] = None,
    out: Optional[TextIO] = None,
) -> int:
    """Writes the coordinate CSV to `out` (stdout by default)."""
    header, coords = plot_rows(read_mmin(mmin_path), mode, n, eps)
    writer = csv.writer(out or sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(coords)
    return 0
