"""Reference data produced by tests/oracle.py (brute-force monomial spans and
the dimension criterion for attained order vectors), frozen here.

name: (delta, conductor vector, members of the value set inside [0, conductor])
"""

FROZEN = {
    'A1': (1, (1, 1), [(0, 0), (1, 1)]),
    'A2': (1, (2,), [(0,), (2,)]),
    'A3': (2, (2, 2), [(0, 0), (1, 1), (2, 2)]),
    'A4': (2, (4,), [(0,), (2,), (4,)]),
    'A5': (3, (3, 3), [(0, 0), (1, 1), (2, 2), (3, 3)]),
    'A6': (3, (6,), [(0,), (2,), (4,), (6,)]),
    'A7': (4, (4, 4), [(0, 0), (1, 1), (2, 2), (3, 3), (4, 4)]),
    'A8': (4, (8,), [(0,), (2,), (4,), (6,), (8,)]),
    'D4': (3, (2, 2, 2), [(0, 0, 0), (1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 2, 2)]),
    'D5': (3, (2, 4), [(0, 0), (1, 2), (1, 3), (2, 2), (2, 4)]),
    'D6': (4, (2, 3, 3), [(0, 0, 0), (1, 1, 1), (1, 2, 2), (1, 2, 3), (1, 3, 2), (2, 1, 1), (2, 2, 2), (2, 3, 3)]),
    'D7': (4, (2, 6), [(0, 0), (1, 2), (1, 4), (1, 5), (2, 2), (2, 4), (2, 6)]),
    'D8': (5, (2, 4, 4), [(0, 0, 0), (1, 1, 1), (1, 2, 2), (1, 3, 3), (1, 3, 4), (1, 4, 3), (2, 1, 1), (2, 2, 2), (2, 3, 3), (2, 4, 4)]),
    'E6': (3, (6,), [(0,), (3,), (4,), (6,)]),
    'E7': (4, (3, 5), [(0, 0), (1, 2), (2, 3), (2, 4), (3, 3), (3, 5)]),
    'E8': (4, (8,), [(0,), (3,), (5,), (6,), (8,)]),
    'node_axes': (1, (1, 1), [(0, 0), (1, 1)]),
    'node_diagonals': (1, (1, 1), [(0, 0), (1, 1)]),
    't2_t3': (1, (2,), [(0,), (2,)]),
    't2_t5': (2, (4,), [(0,), (2,), (4,)]),
    't2_t7': (3, (6,), [(0,), (2,), (4,), (6,)]),
    't2_t9': (4, (8,), [(0,), (2,), (4,), (6,), (8,)]),
    't2_t11': (5, (10,), [(0,), (2,), (4,), (6,), (8,), (10,)]),
    't3_t7': (6, (12,), [(0,), (3,), (6,), (7,), (9,), (10,), (12,)]),
    't4_t6+t7': (8, (16,), [(0,), (4,), (6,), (8,), (10,), (12,), (13,), (14,), (16,)]),
    'space_axes3': (2, (1, 1, 1), [(0, 0, 0), (1, 1, 1)]),
    'lines3': (3, (2, 2, 2), [(0, 0, 0), (1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 2, 2)]),
    'lines4': (6, (3, 3, 3, 3), [(0, 0, 0, 0), (1, 1, 1, 1), (1, 1, 1, 2), (1, 1, 1, 3), (1, 1, 2, 1), (1, 1, 3, 1), (1, 2, 1, 1), (1, 3, 1, 1), (2, 1, 1, 1), (2, 2, 2, 2), (2, 2, 2, 3), (2, 2, 3, 2), (2, 2, 3, 3), (2, 3, 2, 2), (2, 3, 2, 3), (2, 3, 3, 2), (3, 1, 1, 1), (3, 2, 2, 2), (3, 2, 2, 3), (3, 2, 3, 2), (3, 3, 2, 2), (3, 3, 3, 3)]),
    'smooth': (0, (0,), [(0,)]),
}
