"""Vendored golden values for the reproduction tables.

Each entry carries its table and row so a diff report can point back at
the exact cell.  Distribution vectors are indexed from the statistic's
minimum value: 0 for neg_ones / inv / posinv, 1 for the positional
statistics.  Polytope columns that this toolkit does not compute
(f-vectors beyond vertex and facet counts, graph diameters, starred
volumes) are simply absent here and reported as "not computed".
"""

from fractions import Fraction as F

# counts shared by magog matrices, ASMs, and boolean triangles
TOTALS = {1: 1, 2: 2, 3: 7, 4: 42, 5: 429, 6: 7436, 7: 218348}

# table1: negative ones in magog matrices
TABLE1 = {
    3: (5, 2),                                                       # table1 n=3
    4: (14, 21, 7),                                                  # table1 n=4
    5: (42, 149, 166, 64, 8),                                        # table1 n=5
    6: (132, 892, 2186, 2424, 1373, 379, 50),                        # table1 n=6
    7: (429, 4857, 21567, 48323, 62565, 48933, 23684, 6836, 1075, 79),  # table1 n=7
}

# table2: negative ones in ASMs
TABLE2 = {
    3: (6, 1),                                                       # table2 n=3
    4: (24, 16, 2),                                                  # table2 n=4
    5: (120, 200, 94, 14, 1),                                        # table2 n=5
    6: (720, 2400, 2684, 1284, 310, 36, 2),                          # table2 n=6
    7: (5040, 29400, 63308, 66158, 38390, 13037, 2660, 328, 26, 1),  # table2 n=7
}

# table3: positional ones in magog matrices
TABLE3 = {
    3: {
        "first_row_one": (1, 3, 3),                                  # table3 n=3
        "first_col_one": (1, 4, 2),
        "last_row_one": (2, 2, 3),
    },
    4: {
        "first_row_one": (1, 7, 17, 17),                             # table3 n=4
        "first_col_one": (1, 13, 21, 7),
        "last_row_one": (7, 7, 12, 16),
    },
    5: {
        "first_row_one": (1, 15, 75, 169, 169),                      # table3 n=5
        "first_col_one": (1, 41, 177, 168, 42),
        "last_row_one": (42, 42, 77, 119, 149),
    },
    6: {
        "first_row_one": (1, 31, 304, 1328, 2886, 2886),             # table3 n=6
        "first_col_one": (1, 131, 1462, 3268, 2145, 429),
        "last_row_one": (429, 429, 816, 1380, 1988, 2394),
    },
    7: {
        "first_row_one": (1, 63, 1190, 9690, 39444, 83980, 83980),   # table3 n=7
        "first_col_one": (1, 428, 12506, 63570, 89791, 44616, 7436),
        "last_row_one": (7436, 7436, 14443, 25883, 41028, 56212, 65910),
    },
}

# table4: positional ones in ASMs (first row, last row, and first column
# distributions coincide)
TABLE4 = {
    3: (2, 3, 2),                                                    # table4 n=3
    4: (7, 14, 14, 7),                                               # table4 n=4
    5: (42, 105, 135, 105, 42),                                      # table4 n=5
    6: (429, 1287, 2002, 2002, 1287, 429),                           # table4 n=6
    7: (7436, 26026, 47320, 56784, 47320, 26026, 7436),              # table4 n=7
}

# table5: inversion statistics of magog matrices
TABLE5 = {
    3: {
        "posinv": (1, 3, 2, 1),                                      # table5 n=3
        "inv": (1, 1, 4, 1),
    },
    4: {
        "posinv": (1, 6, 10, 13, 8, 3, 1),                           # table5 n=4
        "inv": (1, 1, 5, 11, 12, 11, 1),
    },
    5: {
        "posinv": (1, 10, 31, 70, 94, 90, 74, 39, 15, 4, 1),         # table5 n=5
        "inv": (1, 1, 6, 14, 39, 58, 104, 105, 74, 26, 1),
    },
    6: {
        "posinv": (1, 15, 75, 259, 577, 954, 1315, 1391, 1171, 829,
                   501, 234, 84, 24, 5, 1),                          # table5 n=6
        "inv": (1, 1, 7, 17, 52, 132, 275, 541, 921, 1332, 1481,
                1420, 856, 342, 57, 1),
    },
    7: {
        "posinv": (1, 21, 155, 764, 2516, 6240, 12757, 21033, 28567,
                   33326, 33789, 29256, 21730, 13983, 7909, 3935,
                   1619, 552, 153, 35, 6, 1),                        # table5 n=7
        "inv": (1, 1, 8, 20, 66, 181, 509, 1139, 2573, 5275, 9970,
                16752, 25117, 33291, 37866, 35740, 26797, 15694,
                5873, 1354, 120, 1),
    },
}

# table6: inversion statistics of ASMs
TABLE6 = {
    3: {
        "posinv": (1, 3, 2, 1),                                      # table6 n=3
        "inv": (1, 2, 3, 1),
    },
    4: {
        "posinv": (1, 6, 11, 13, 7, 3, 1),                           # table6 n=4
        "inv": (1, 3, 7, 13, 11, 6, 1),
    },
    5: {
        "posinv": (1, 10, 35, 77, 99, 92, 67, 31, 12, 4, 1),         # table6 n=5
        "inv": (1, 4, 12, 31, 67, 92, 99, 77, 35, 10, 1),
    },
    6: {
        "posinv": (1, 15, 85, 302, 684, 1122, 1443, 1396, 1077, 696,
                   379, 156, 56, 18, 5, 1),                          # table6 n=6
        "inv": (1, 5, 18, 56, 156, 379, 696, 1077, 1396, 1443, 1122,
                684, 302, 85, 15, 1),
    },
    7: {
        "posinv": (1, 21, 175, 917, 3196, 8166, 16421, 26064, 33489,
                   36010, 33089, 25580, 16907, 9778, 5016, 2261,
                   849, 287, 89, 25, 6, 1),                          # table6 n=7
        "inv": (1, 6, 25, 89, 287, 849, 2261, 5016, 9778, 16907,
                25580, 33089, 36010, 33489, 26064, 16421, 8166,
                3196, 917, 175, 21, 1),
    },
}

# table7: magog matrix hull data (computable columns)
TABLE7_DIMENSION = {2: 1, 3: 4, 4: 9, 5: 16}                         # table7 dimension column
TABLE7_VERTICES = {2: 2, 3: 7, 4: 42, 5: 429}                        # table7 f-vector, vertex entry
TABLE7_EHRHART = {
    2: (F(1), F(1)),                                                 # table7 n=2: t + 1
    3: (F(1), F(31, 12), F(19, 8), F(11, 12), F(1, 8)),              # table7 n=3
}
TABLE7_VOLUME = {2: 1, 3: 3}                                         # table7 volume column

# table8: ASM hull comparison data (computable columns)
TABLE8_DIMENSION = {2: 1, 3: 4, 4: 9, 5: 16}                         # table8 dimension column
TABLE8_VERTICES = {2: 2, 3: 7, 4: 42, 5: 429}                        # table8 f-vector, vertex entry

# table9: boolean triangle hull data
TABLE9_DIMENSION = {2: 1, 3: 3, 4: 6, 5: 10}                         # table9 dimension column
TABLE9_VERTICES = {2: 2, 3: 7, 4: 42, 5: 429}                        # table9 f-vector, vertex entry
TABLE9_FACETS = {3: 7, 4: 15}                                        # table9 f-vector, facet entry
TABLE9_EHRHART = {
    2: (F(1), F(1)),                                                 # table9 n=2: t + 1
    3: (F(1), F(8, 3), F(5, 2), F(5, 6)),                            # table9 n=3
    4: (F(1), F(59, 12), F(761, 72), F(38, 3), F(319, 36),
        F(41, 12), F(41, 72)),                                       # table9 n=4
    5: (F(1), F(1943, 252), F(703609, 25200), F(564799, 9072),
        F(17088191, 181440), F(217183, 2160), F(1651621, 21600),
        F(61709, 1512), F(884033, 60480), F(8992, 2835),
        F(4496, 14175)),                                             # table9 n=5 (stretch)
}
TABLE9_VOLUME = {2: 1, 3: 5, 4: 410}                                 # table9 volume column

FACET_COUNT_FORMULA = {n: (n - 1) * (3 * n - 2) // 2 for n in range(2, 11)}
