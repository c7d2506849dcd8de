"""Worked-example tables transcribed from the supplier-selection case."""

T8 = [
    [(1, 1, 1, 1), (0.14, 0.17, 0.27, 0.33), (1, 1, 5, 5), (0, 0, 1.06, 1.996)],
    [(3.12, 4.12, 5.88, 6.88), (1, 1, 1, 1), (3.655, 4.35, 5.65, 6.35), (0.97, 0.97, 0.97, 1)],
    [(0.2, 0.2, 1, 1), (0.16, 0.18, 0.25, 0.3), (1, 1, 1, 1), (0, 0, 1.06, 1.996)],
    [(1.33, 2.27, 3.73, 4.67), (0.51, 0.76, 1, 1), (1.33, 2.27, 3.73, 4.64), (1, 1, 1, 1)],
]
# (0, 0, 0.87, 0.81) in the printed table; ordered form used here
T9 = [
    [(1, 1, 1, 1), (0, 0, 0.87, 1.81), (0.24, 0.29, 0.54, 1.01)],
    [(5.33, 6.27, 7.73, 8.67), (1, 1, 1, 1), (5.12, 6.12, 7.88, 8.88)],
    [(1.66, 2.35, 3.65, 4.35), (0.11, 0.13, 0.17, 0.2), (1, 1, 1, 1)],
]
T10 = [
    [(1, 1, 1, 1), (0, 0, 1.06, 1.996), (0.106, 0.11, 0.12, 0.13)],
    [(1.33, 2.27, 3.73, 4.67), (1, 1, 1, 1), (0.14, 0.17, 0.27, 0.33)],
    [(7.65, 8.34, 9.33, 9.68), (3.12, 4.12, 5.88, 6.88), (1, 1, 1, 1)],
]
T11 = [
    [(1, 1, 1, 1), (0, 0, 0.87, 1.81), (5.655, 6.35, 7.65, 8.35)],
    [(5.33, 6.27, 7.73, 8.67), (1, 1, 1, 1), (8.05, 8.55, 9.45, 9.95)],
    [(0.1187, 0.13, 0.16, 0.18), (0.09, 0.1, 0.12, 0.13), (1, 1, 1, 1)],
]
T12 = [
    [(1, 1, 1, 1), (0, 0, 0.93, 1.87), (0.16, 0.18, 0.25, 0.304)],
    [(3.33, 4.27, 5.73, 6.67), (1, 1, 1, 1), (0.97, 0.97, 0.97, 1)],
    [(3.655, 4.35, 5.65, 6.35), (0.51, 0.76, 1, 1), (1, 1, 1, 1)],
]
T13 = [(0, 0, 0.3171, 0.322), (0.28, 0.33, 0.69, 0.92), (0, 0, 0.21, 0.32), (0.15, 0.23, 0.56, 0.77)]
T14 = [
    [(0, 0, 0.19, 0.34), (0.47, 0.61, 0.97, 1.19), (0.09, 0.12, 0.21, 0.27)],
    [(0, 0, 0.13, 0.19), (0.098, 0.14, 0.25, 0.34), (0.49, 0.61, 0.96, 1.18)],
    [(0, 0, 0.47, 0.66), (0.49, 0.596, 1.04, 1.19), (0.03, 0.04, 0.07, 0.08)],
    [(0, 0, 0.199, 0.31), (0.32, 0.39, 0.57, 0.695), (0.27, 0.36, 0.58, 0.68)],
]
T15 = [(0, 0, 0.36, 0.73), (0.076, 0.13, 1.02, 1.6), (0.18, 0.29, 1.06, 1.72)]
RANK = (0.221, 0.372, 0.4242)

# Crisp levels of the criteria comparisons
CRITERIA_CRISP = [
    [1, 1 / 5, 3, 1 / 3],
    [5, 1, 5, 1],
    [1 / 3, 1 / 5, 1, 1 / 3],
    [3, 1, 3, 1],
]
