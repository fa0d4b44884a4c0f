"""Rebuild the C_24_i catalog files from the typeset Figure 1 matrices.

Usage: python3 tools/extract_figure1.py paper.md src/z4sd/data/catalog
"""

import re
import sys
from pathlib import Path

from z4sd.constructions import from_standard_form
from z4sd.z4 import write_z4c


def matrices(text: str) -> dict[int, list[str]]:
    out = {}
    for m in re.finditer(r"\$M_\{(\d+)\}\$:&(.*?)(?=\$M_\{|\\end)", text, re.S):
        groups = re.findall(r"\b[0-3]{12}\b", m.group(2))
        out[int(m.group(1))] = groups
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    src, dest = Path(argv[0]), Path(argv[1])
    mats = matrices(src.read_text())
    for i, groups in sorted(mats.items()):
        if len(groups) != 12:
            raise SystemExit(f"M_{i}: {len(groups)} rows")
        M = [[int(ch) for ch in g] for g in groups]
        code = from_standard_form(M)
        write_z4c(dest / f"C_24_{i}.z4c", code, [f"C_24_{i}: generator (I_12 | M_{i})"])
    print(f"{len(mats)} matrices")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
