"""Published Hodge numbers used as regression targets.

Rows are keyed by weight ``p + q`` (lower half of the diamond, middle included)
and list only the non-zero entries, as they appear in a printed table.
"""

TABLE_ONE = {
    "Y": {
        "source": ("section", 3, 10),
        "rows": {0: [1], 2: [1], 4: [2], 6: [3], 8: [4], 10: [5], 12: [7], 14: [8], 16: [9], 18: [10],
                 20: [1, 30, 1]},
    },
    "T": {"source": ("derive", "T2_10"), "rows": {0: [1], 2: [1], 4: [2], 6: [1, 22, 1], 8: [1, 23, 1]}},
    "P": {"source": ("derive", "P1_10"), "rows": {0: [1], 2: [1], 4: [1, 22, 1], 6: [1, 22, 1]}},
    "Y1": {
        "source": ("derive", "Y1"),
        "rows": {0: [1], 2: [1], 4: [2], 6: [3], 8: [4], 10: [5], 12: [6], 14: [1, 26, 1]},
    },
    "Y2": {"source": ("derive", "Y2"), "rows": {0: [1], 2: [1], 4: [2], 6: [6], 8: [1, 26, 1]}},
}
