"""Regenerate src/paretobox/_sobol_table.py from SciPy's bundled Joe-Kuo data.

The generator only needs the first 32 dimensions; freezing them as plain
Python keeps the sequence bit-reproducible without a SciPy runtime
dependency. Run from the repository root:

    python scripts/make_sobol_table.py
"""

from pathlib import Path

import numpy as np
import scipy.stats._sobol as _sobol

MAX_DIMENSION = 32

HEADER = '''"""Joe-Kuo direction-number table for Sobol dimensions 2..32.

Frozen copy of the first rows of the standard Joe-Kuo (D6) table, so the
generated sequence is bit-reproducible and independent of any external
library. Dimension 1 is the base-2 van der Corput sequence and needs no
table entry.

POLYNOMIALS[j] is the full bit encoding of the primitive polynomial for
dimension j+2 (for example 7 = x^2 + x + 1); M_INITIAL[j] holds that
dimension's initial odd direction integers m_1..m_s, s = degree.

Regenerate with scripts/make_sobol_table.py.
"""

'''


def main() -> None:
    poly = np.empty(_sobol._MAXDIM, dtype=np.uint32)
    vinit = np.empty((_sobol._MAXDIM, _sobol._MAXDEG), dtype=np.uint32)
    _sobol._initialize_direction_numbers(poly, vinit, np.uint32)

    lines = [HEADER, "POLYNOMIALS = ("]
    for dim in range(2, MAX_DIMENSION + 1):
        lines.append(f"    {int(poly[dim - 1])},")
    lines.append(")\n")
    lines.append("M_INITIAL = (")
    for dim in range(2, MAX_DIMENSION + 1):
        degree = int(poly[dim - 1]).bit_length() - 1
        ms = tuple(int(v) for v in vinit[dim - 1, :degree])
        lines.append(f"    {ms!r},")
    lines.append(")")

    out = Path(__file__).resolve().parents[1] / "src" / "paretobox" / "_sobol_table.py"
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
