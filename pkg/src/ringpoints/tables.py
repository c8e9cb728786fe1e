"""Reference values for the maximum cardinalities at small parameters.

These are the known values the table harness diffs against.  An entry is a
pair (value, exact): exact entries are proven maxima, inexact ones are the
best known lower bounds for parameters where the exhaustive computation is
out of desk-scale reach.
"""

from __future__ import annotations

Entry = tuple[int, bool]

# I(n, m): maximum integral point sets over Z_n^m, rows m = 2..7,
# columns n in (3, 4, 5, 7, 8, 9, 11, 13, 16, 17); None = unknown.
TABLE1_COLUMNS = (3, 4, 5, 7, 8, 9, 11, 13, 16, 17)

TABLE1: dict[tuple[int, int], Entry] = {}


def _fill_table1() -> None:
    rows: dict[int, list] = {
        2: [3, 8, 5, 7, 16, 27, 11, 13, 64, 17],
        3: [4, 16, 25, 8, 64, 81, 11, 169, 256, 289],
        4: [9, 32, 25, 49, 512, 324, 121, (169, False), 1024, None],
        5: [27, 128, 125, 343, 2048, (893, False), (1331, False), (2197, False), None, None],
        6: [33, 256, (125, False), None, (15296, False), None, None, None, None, None],
        7: [(35, False), 1024, None, None, (81792, False), None, None, None, None, None],
    }
    for m, values in rows.items():
        for n, v in zip(TABLE1_COLUMNS, values):
            if v is None:
                continue
            if isinstance(v, tuple):
                TABLE1[(n, m)] = v
            else:
                TABLE1[(n, m)] = (v, True)


_fill_table1()

# Maximum with no three points collinear (semi-general position), n = 1..60.
_TABLE2_VALUES = [
    1, 4, 2, 4, 4, 4, 4, 6, 6, 6,
    6, 4, 6, 6, 4, 8, 8, 10, 10, 8,
    4, 8, 12, 6, 10, 10, 10, 8, 14, 6,
    16, 14, 6, 10, 6, 12, 18, 12, 6, 10,
    20, 6, 22, 10, 11, 14, 24, 8, 18, 17,
    8, 12, 26, 13, 8, 10, 10, 16, 30, 8,
]
_TABLE2_LOWER_ONLY = {49, 50, 54, 58}

TABLE2: dict[int, Entry] = {
    n: (v, n not in _TABLE2_LOWER_ONLY) for n, v in enumerate(_TABLE2_VALUES, start=1)
}

# Maximum with additionally no four points on a circle (general position), n = 1..70.
_TABLE3_VALUES = [
    1, 4, 2, 4, 4, 4, 3, 4, 4, 6,
    4, 4, 5, 6, 4, 6, 5, 8, 5, 6,
    4, 8, 5, 4, 6, 8, 7, 6, 7, 6,
    6, 8, 4, 10, 5, 10, 7, 8, 6, 6,
    9, 6, 8, 8, 8, 10, 7, 8, 11, 12,
    7, 9, 9, 11, 6, 6, 6, 11, 9, 8,
    9, 11, 8, 10, 7, 8, 9, 10, 7, 9,
]
_TABLE3_LOWER_ONLY = {36, 49, 50, 52, 53, 54, 58, 59, 61, 62, 64, 67, 68, 70}

TABLE3: dict[int, Entry] = {
    n: (v, n not in _TABLE3_LOWER_ONLY) for n, v in enumerate(_TABLE3_VALUES, start=1)
}

# I(4, m) for m = 1..12 via the even-modulus reduction.
I4_SEQUENCE = (4, 8, 16, 32, 128, 256, 1024, 4096, 16384, 32768, 65536, 131072)
