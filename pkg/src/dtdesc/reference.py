"""Published descendant counts by order n and triangle count t (4 <= t <= 14)."""

PUBLISHED_T_RANGE = range(4, 15)

_ROWS = {
    5: [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    6: [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    7: [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    8: [0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    9: [0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0],
    10: [1, 2, 6, 2, 2, 0, 1, 0, 0, 0, 0],
    11: [3, 8, 19, 15, 4, 2, 0, 1, 0, 0, 0],
    12: [8, 37, 88, 76, 34, 7, 3, 0, 1, 0, 0],
    13: [21, 147, 390, 435, 218, 61, 10, 3, 0, 1, 0],
    14: [67, 550, 1758, 2405, 1576, 505, 106, 14, 4, 0, 1],
}

PUBLISHED_COUNTS: dict[tuple[int, int], int] = {
    (n, t): row[t - 4] for n, row in _ROWS.items() for t in PUBLISHED_T_RANGE
}

LAYER_SIZES = {n: sum(row) for n, row in _ROWS.items()}
