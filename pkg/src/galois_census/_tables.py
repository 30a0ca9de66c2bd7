"""Generated formula tables. Regenerate with tools/derive_tables.py.

DISC_TERMS[n] lists (coeff, (e1..en)) with Disc(x^n + a1 x^{n-1} + ... + an)
= sum coeff * prod a_i^{e_i}.  QUINTIC_RESOLVENT_TERMS[j] lists
(coeff, (ep, eq, er, es)) for the y^j coefficient of the degree-6
resolvent of x^5 + p x^3 + q x^2 + r x + s.
"""

DISC_TERMS = {
    2: (
        (1, (2, 0)),
        (-4, (0, 1)),
    ),
    3: (
        (-4, (3, 0, 1)),
        (1, (2, 2, 0)),
        (18, (1, 1, 1)),
        (-4, (0, 3, 0)),
        (-27, (0, 0, 2)),
    ),
    4: (
        (-27, (4, 0, 0, 2)),
        (18, (3, 1, 1, 1)),
        (-4, (3, 0, 3, 0)),
        (-4, (2, 3, 0, 1)),
        (1, (2, 2, 2, 0)),
        (144, (2, 1, 0, 2)),
        (-6, (2, 0, 2, 1)),
        (-80, (1, 2, 1, 1)),
        (18, (1, 1, 3, 0)),
        (-192, (1, 0, 1, 2)),
        (16, (0, 4, 0, 1)),
        (-4, (0, 3, 2, 0)),
        (-128, (0, 2, 0, 2)),
        (144, (0, 1, 2, 1)),
        (-27, (0, 0, 4, 0)),
        (256, (0, 0, 0, 3)),
    ),
    5: (
        (256, (5, 0, 0, 0, 3)),
        (-192, (4, 1, 0, 1, 2)),
        (-128, (4, 0, 2, 0, 2)),
        (144, (4, 0, 1, 2, 1)),
        (-27, (4, 0, 0, 4, 0)),
        (144, (3, 2, 1, 0, 2)),
        (-6, (3, 2, 0, 2, 1)),
        (-80, (3, 1, 2, 1, 1)),
        (18, (3, 1, 1, 3, 0)),
        (-1600, (3, 1, 0, 0, 3)),
        (16, (3, 0, 4, 0, 1)),
        (-4, (3, 0, 3, 2, 0)),
        (160, (3, 0, 1, 1, 2)),
        (-36, (3, 0, 0, 3, 1)),
        (-27, (2, 4, 0, 0, 2)),
        (18, (2, 3, 1, 1, 1)),
        (-4, (2, 3, 0, 3, 0)),
        (-4, (2, 2, 3, 0, 1)),
        (1, (2, 2, 2, 2, 0)),
        (1020, (2, 2, 0, 1, 2)),
        (560, (2, 1, 2, 0, 2)),
        (-746, (2, 1, 1, 2, 1)),
        (144, (2, 1, 0, 4, 0)),
        (24, (2, 0, 3, 1, 1)),
        (-6, (2, 0, 2, 3, 0)),
        (2000, (2, 0, 1, 0, 3)),
        (-50, (2, 0, 0, 2, 2)),
        (-630, (1, 3, 1, 0, 2)),
        (24, (1, 3, 0, 2, 1)),
        (356, (1, 2, 2, 1, 1)),
        (-80, (1, 2, 1, 3, 0)),
        (2250, (1, 2, 0, 0, 3)),
        (-72, (1, 1, 4, 0, 1)),
        (18, (1, 1, 3, 2, 0)),
        (-2050, (1, 1, 1, 1, 2)),
        (160, (1, 1, 0, 3, 1)),
        (-900, (1, 0, 3, 0, 2)),
        (1020, (1, 0, 2, 2, 1)),
        (-192, (1, 0, 1, 4, 0)),
        (-2500, (1, 0, 0, 1, 3)),
        (108, (0, 5, 0, 0, 2)),
        (-72, (0, 4, 1, 1, 1)),
        (16, (0, 4, 0, 3, 0)),
        (16, (0, 3, 3, 0, 1)),
        (-4, (0, 3, 2, 2, 0)),
        (-900, (0, 3, 0, 1, 2)),
        (825, (0, 2, 2, 0, 2)),
        (560, (0, 2, 1, 2, 1)),
        (-128, (0, 2, 0, 4, 0)),
        (-630, (0, 1, 3, 1, 1)),
        (144, (0, 1, 2, 3, 0)),
        (-3750, (0, 1, 1, 0, 3)),
        (2000, (0, 1, 0, 2, 2)),
        (108, (0, 0, 5, 0, 1)),
        (-27, (0, 0, 4, 2, 0)),
        (2250, (0, 0, 2, 1, 2)),
        (-1600, (0, 0, 1, 3, 1)),
        (256, (0, 0, 0, 5, 0)),
        (3125, (0, 0, 0, 0, 4)),
    ),
    6: (
        (3125, (6, 0, 0, 0, 0, 4)),
        (-2500, (5, 1, 0, 0, 1, 3)),
        (-3750, (5, 0, 1, 1, 0, 3)),
        (2000, (5, 0, 1, 0, 2, 2)),
        (2250, (5, 0, 0, 2, 1, 2)),
        (-1600, (5, 0, 0, 1, 3, 1)),
        (256, (5, 0, 0, 0, 5, 0)),
        (2000, (4, 2, 0, 1, 0, 3)),
        (-50, (4, 2, 0, 0, 2, 2)),
        (2250, (4, 1, 2, 0, 0, 3)),
        (-2050, (4, 1, 1, 1, 1, 2)),
        (160, (4, 1, 1, 0, 3, 1)),
        (-900, (4, 1, 0, 3, 0, 2)),
        (1020, (4, 1, 0, 2, 2, 1)),
        (-192, (4, 1, 0, 1, 4, 0)),
        (-22500, (4, 1, 0, 0, 0, 4)),
        (-900, (4, 0, 3, 0, 1, 2)),
        (825, (4, 0, 2, 2, 0, 2)),
        (560, (4, 0, 2, 1, 2, 1)),
        (-128, (4, 0, 2, 0, 4, 0)),
        (-630, (4, 0, 1, 3, 1, 1)),
        (144, (4, 0, 1, 2, 3, 0)),
        (2250, (4, 0, 1, 0, 1, 3)),
        (108, (4, 0, 0, 5, 0, 1)),
        (-27, (4, 0, 0, 4, 2, 0)),
        (1500, (4, 0, 0, 2, 0, 3)),
        (-1700, (4, 0, 0, 1, 2, 2)),
        (320, (4, 0, 0, 0, 4, 1)),
        (-1600, (3, 3, 1, 0, 0, 3)),
        (160, (3, 3, 0, 1, 1, 2)),
        (-36, (3, 3, 0, 0, 3, 1)),
        (1020, (3, 2, 2, 0, 1, 2)),
        (560, (3, 2, 1, 2, 0, 2)),
        (-746, (3, 2, 1, 1, 2, 1)),
        (144, (3, 2, 1, 0, 4, 0)),
        (24, (3, 2, 0, 3, 1, 1)),
        (-6, (3, 2, 0, 2, 3, 0)),
        (15600, (3, 2, 0, 0, 1, 3)),
        (-630, (3, 1, 3, 1, 0, 2)),
        (24, (3, 1, 3, 0, 2, 1)),
        (356, (3, 1, 2, 2, 1, 1)),
        (-80, (3, 1, 2, 1, 3, 0)),
        (-72, (3, 1, 1, 4, 0, 1)),
        (18, (3, 1, 1, 3, 2, 0)),
        (19800, (3, 1, 1, 1, 0, 3)),
        (-12330, (3, 1, 1, 0, 2, 2)),
        (-13040, (3, 1, 0, 2, 1, 2)),
        (9768, (3, 1, 0, 1, 3, 1)),
        (-1600, (3, 1, 0, 0, 5, 0)),
        (108, (3, 0, 5, 0, 0, 2)),
        (-72, (3, 0, 4, 1, 1, 1)),
        (16, (3, 0, 4, 0, 3, 0)),
        (16, (3, 0, 3, 3, 0, 1)),
        (-4, (3, 0, 3, 2, 2, 0)),
        (-1350, (3, 0, 3, 0, 0, 3)),
        (1980, (3, 0, 2, 1, 1, 2)),
        (-208, (3, 0, 2, 0, 3, 1)),
        (-120, (3, 0, 1, 3, 0, 2)),
        (-682, (3, 0, 1, 2, 2, 1)),
        (160, (3, 0, 1, 1, 4, 0)),
        (27000, (3, 0, 1, 0, 0, 4)),
        (144, (3, 0, 0, 4, 1, 1)),
        (-36, (3, 0, 0, 3, 3, 0)),
        (-1800, (3, 0, 0, 1, 1, 3)),
        (410, (3, 0, 0, 0, 3, 2)),
        (256, (2, 5, 0, 0, 0, 3)),
        (-192, (2, 4, 1, 0, 1, 2)),
        (-128, (2, 4, 0, 2, 0, 2)),
        (144, (2, 4, 0, 1, 2, 1)),
        (-27, (2, 4, 0, 0, 4, 0)),
        (144, (2, 3, 2, 1, 0, 2)),
        (-6, (2, 3, 2, 0, 2, 1)),
        (-80, (2, 3, 1, 2, 1, 1)),
        (18, (2, 3, 1, 1, 3, 0)),
        (16, (2, 3, 0, 4, 0, 1)),
        (-4, (2, 3, 0, 3, 2, 0)),
        (-10560, (2, 3, 0, 1, 0, 3)),
        (248, (2, 3, 0, 0, 2, 2)),
        (-27, (2, 2, 4, 0, 0, 2)),
        (18, (2, 2, 3, 1, 1, 1)),
        (-4, (2, 2, 3, 0, 3, 0)),
        (-4, (2, 2, 2, 3, 0, 1)),
        (1, (2, 2, 2, 2, 2, 0)),
        (-9720, (2, 2, 2, 0, 0, 3)),
        (10152, (2, 2, 1, 1, 1, 2)),
        (-682, (2, 2, 1, 0, 3, 1)),
        (4816, (2, 2, 0, 3, 0, 2)),
        (-5428, (2, 2, 0, 2, 2, 1)),
        (1020, (2, 2, 0, 1, 4, 0)),
        (43200, (2, 2, 0, 0, 0, 4)),
        (3942, (2, 1, 3, 0, 1, 2)),
        (-4536, (2, 1, 2, 2, 0, 2)),
        (-2412, (2, 1, 2, 1, 2, 1)),
        (560, (2, 1, 2, 0, 4, 0)),
        (3272, (2, 1, 1, 3, 1, 1)),
        (-746, (2, 1, 1, 2, 3, 0)),
        (-31320, (2, 1, 1, 0, 1, 3)),
        (-576, (2, 1, 0, 5, 0, 1)),
        (144, (2, 1, 0, 4, 2, 0)),
        (-6480, (2, 1, 0, 2, 0, 3)),
        (8748, (2, 1, 0, 1, 2, 2)),
        (-1700, (2, 1, 0, 0, 4, 1)),
        (162, (2, 0, 4, 1, 0, 2)),
        (-108, (2, 0, 3, 2, 1, 1)),
        (24, (2, 0, 3, 1, 3, 0)),
        (24, (2, 0, 2, 4, 0, 1)),
        (-6, (2, 0, 2, 3, 2, 0)),
        (-27540, (2, 0, 2, 1, 0, 3)),
        (15417, (2, 0, 2, 0, 2, 2)),
        (16632, (2, 0, 1, 2, 1, 2)),
        (-12330, (2, 0, 1, 1, 3, 1)),
        (2000, (2, 0, 1, 0, 5, 0)),
        (-192, (2, 0, 0, 4, 0, 2)),
        (248, (2, 0, 0, 3, 2, 1)),
        (-50, (2, 0, 0, 2, 4, 0)),
        (-32400, (2, 0, 0, 1, 0, 4)),
        (540, (2, 0, 0, 0, 2, 3)),
        (6912, (1, 4, 1, 0, 0, 3)),
        (-640, (1, 4, 0, 1, 1, 2)),
        (144, (1, 4, 0, 0, 3, 1)),
        (-4464, (1, 3, 2, 0, 1, 2)),
        (-2496, (1, 3, 1, 2, 0, 2)),
        (3272, (1, 3, 1, 1, 2, 1)),
        (-630, (1, 3, 1, 0, 4, 0)),
        (-96, (1, 3, 0, 3, 1, 1)),
        (24, (1, 3, 0, 2, 3, 0)),
        (-21888, (1, 3, 0, 0, 1, 3)),
        (2808, (1, 2, 3, 1, 0, 2)),
        (-108, (1, 2, 3, 0, 2, 1)),
        (-1584, (1, 2, 2, 2, 1, 1)),
        (356, (1, 2, 2, 1, 3, 0)),
        (320, (1, 2, 1, 4, 0, 1)),
        (-80, (1, 2, 1, 3, 2, 0)),
        (-3456, (1, 2, 1, 1, 0, 3)),
        (16632, (1, 2, 1, 0, 2, 2)),
        (15264, (1, 2, 0, 2, 1, 2)),
        (-13040, (1, 2, 0, 1, 3, 1)),
        (2250, (1, 2, 0, 0, 5, 0)),
        (-486, (1, 1, 5, 0, 0, 2)),
        (324, (1, 1, 4, 1, 1, 1)),
        (-72, (1, 1, 4, 0, 3, 0)),
        (-72, (1, 1, 3, 3, 0, 1)),
        (18, (1, 1, 3, 2, 2, 0)),
        (21384, (1, 1, 3, 0, 0, 3)),
        (-22896, (1, 1, 2, 1, 1, 2)),
        (1980, (1, 1, 2, 0, 3, 1)),
        (-5760, (1, 1, 1, 3, 0, 2)),
        (10152, (1, 1, 1, 2, 2, 1)),
        (-2050, (1, 1, 1, 1, 4, 0)),
        (-77760, (1, 1, 1, 0, 0, 4)),
        (-640, (1, 1, 0, 4, 1, 1)),
        (160, (1, 1, 0, 3, 3, 0)),
        (31968, (1, 1, 0, 1, 1, 3)),
        (-1800, (1, 1, 0, 0, 3, 2)),
        (-6318, (1, 0, 4, 0, 1, 2)),
        (5832, (1, 0, 3, 2, 0, 2)),
        (3942, (1, 0, 3, 1, 2, 1)),
        (-900, (1, 0, 3, 0, 4, 0)),
        (-4464, (1, 0, 2, 3, 1, 1)),
        (1020, (1, 0, 2, 2, 3, 0)),
        (15552, (1, 0, 2, 0, 1, 3)),
        (768, (1, 0, 1, 5, 0, 1)),
        (-192, (1, 0, 1, 4, 2, 0)),
        (46656, (1, 0, 1, 2, 0, 3)),
        (-31320, (1, 0, 1, 1, 2, 2)),
        (2250, (1, 0, 1, 0, 4, 1)),
        (-21888, (1, 0, 0, 3, 1, 2)),
        (15600, (1, 0, 0, 2, 3, 1)),
        (-2500, (1, 0, 0, 1, 5, 0)),
        (38880, (1, 0, 0, 0, 1, 4)),
        (-1024, (0, 6, 0, 0, 0, 3)),
        (768, (0, 5, 1, 0, 1, 2)),
        (512, (0, 5, 0, 2, 0, 2)),
        (-576, (0, 5, 0, 1, 2, 1)),
        (108, (0, 5, 0, 0, 4, 0)),
        (-576, (0, 4, 2, 1, 0, 2)),
        (24, (0, 4, 2, 0, 2, 1)),
        (320, (0, 4, 1, 2, 1, 1)),
        (-72, (0, 4, 1, 1, 3, 0)),
        (-64, (0, 4, 0, 4, 0, 1)),
        (16, (0, 4, 0, 3, 2, 0)),
        (9216, (0, 4, 0, 1, 0, 3)),
        (-192, (0, 4, 0, 0, 2, 2)),
        (108, (0, 3, 4, 0, 0, 2)),
        (-72, (0, 3, 3, 1, 1, 1)),
        (16, (0, 3, 3, 0, 3, 0)),
        (16, (0, 3, 2, 3, 0, 1)),
        (-4, (0, 3, 2, 2, 2, 0)),
        (-8640, (0, 3, 2, 0, 0, 3)),
        (-5760, (0, 3, 1, 1, 1, 2)),
        (-120, (0, 3, 1, 0, 3, 1)),
        (-4352, (0, 3, 0, 3, 0, 2)),
        (4816, (0, 3, 0, 2, 2, 1)),
        (-900, (0, 3, 0, 1, 4, 0)),
        (-13824, (0, 3, 0, 0, 0, 4)),
        (5832, (0, 2, 3, 0, 1, 2)),
        (8208, (0, 2, 2, 2, 0, 2)),
        (-4536, (0, 2, 2, 1, 2, 1)),
        (825, (0, 2, 2, 0, 4, 0)),
        (-2496, (0, 2, 1, 3, 1, 1)),
        (560, (0, 2, 1, 2, 3, 0)),
        (46656, (0, 2, 1, 0, 1, 3)),
        (512, (0, 2, 0, 5, 0, 1)),
        (-128, (0, 2, 0, 4, 2, 0)),
        (-17280, (0, 2, 0, 2, 0, 3)),
        (-6480, (0, 2, 0, 1, 2, 2)),
        (1500, (0, 2, 0, 0, 4, 1)),
        (-4860, (0, 1, 4, 1, 0, 2)),
        (162, (0, 1, 4, 0, 2, 1)),
        (2808, (0, 1, 3, 2, 1, 1)),
        (-630, (0, 1, 3, 1, 3, 0)),
        (-576, (0, 1, 2, 4, 0, 1)),
        (144, (0, 1, 2, 3, 2, 0)),
        (3888, (0, 1, 2, 1, 0, 3)),
        (-27540, (0, 1, 2, 0, 2, 2)),
        (-3456, (0, 1, 1, 2, 1, 2)),
        (19800, (0, 1, 1, 1, 3, 1)),
        (-3750, (0, 1, 1, 0, 5, 0)),
        (9216, (0, 1, 0, 4, 0, 2)),
        (-10560, (0, 1, 0, 3, 2, 1)),
        (2000, (0, 1, 0, 2, 4, 0)),
        (62208, (0, 1, 0, 1, 0, 4)),
        (-32400, (0, 1, 0, 0, 2, 3)),
        (729, (0, 0, 6, 0, 0, 2)),
        (-486, (0, 0, 5, 1, 1, 1)),
        (108, (0, 0, 5, 0, 3, 0)),
        (108, (0, 0, 4, 3, 0, 1)),
        (-27, (0, 0, 4, 2, 2, 0)),
        (-8748, (0, 0, 4, 0, 0, 3)),
        (21384, (0, 0, 3, 1, 1, 2)),
        (-1350, (0, 0, 3, 0, 3, 1)),
        (-8640, (0, 0, 2, 3, 0, 2)),
        (-9720, (0, 0, 2, 2, 2, 1)),
        (2250, (0, 0, 2, 1, 4, 0)),
        (34992, (0, 0, 2, 0, 0, 4)),
        (6912, (0, 0, 1, 4, 1, 1)),
        (-1600, (0, 0, 1, 3, 3, 0)),
        (-77760, (0, 0, 1, 1, 1, 3)),
        (27000, (0, 0, 1, 0, 3, 2)),
        (-1024, (0, 0, 0, 6, 0, 1)),
        (256, (0, 0, 0, 5, 2, 0)),
        (-13824, (0, 0, 0, 3, 0, 3)),
        (43200, (0, 0, 0, 2, 2, 2)),
        (-22500, (0, 0, 0, 1, 4, 1)),
        (3125, (0, 0, 0, 0, 6, 0)),
        (-46656, (0, 0, 0, 0, 0, 5)),
    ),
}

QUINTIC_RESOLVENT_TERMS = {
    0: (
        (-27, (7, 0, 0, 2)),
        (18, (6, 1, 1, 1)),
        (-4, (6, 0, 3, 0)),
        (-4, (5, 3, 0, 1)),
        (1, (5, 2, 2, 0)),
        (-99, (5, 0, 1, 2)),
        (-150, (4, 2, 0, 2)),
        (196, (4, 1, 2, 1)),
        (48, (4, 0, 4, 0)),
        (12, (3, 3, 1, 1)),
        (-128, (3, 2, 3, 0)),
        (1200, (3, 0, 2, 2)),
        (-12, (2, 5, 0, 1)),
        (65, (2, 4, 2, 0)),
        (-725, (2, 2, 1, 2)),
        (-160, (2, 1, 3, 1)),
        (-192, (2, 0, 5, 0)),
        (3125, (2, 0, 0, 4)),
        (-13, (1, 6, 1, 0)),
        (-125, (1, 4, 0, 2)),
        (590, (1, 3, 2, 1)),
        (-16, (1, 2, 4, 0)),
        (-1250, (1, 1, 1, 3)),
        (-2000, (1, 0, 3, 2)),
        (1, (0, 8, 0, 0)),
        (-124, (0, 5, 1, 1)),
        (17, (0, 4, 3, 0)),
        (3250, (0, 2, 2, 2)),
        (-1600, (0, 1, 4, 1)),
        (256, (0, 0, 6, 0)),
        (-9375, (0, 0, 1, 4)),
    ),
    1: (
        (-108, (5, 0, 0, 2)),
        (117, (4, 1, 1, 1)),
        (32, (4, 0, 3, 0)),
        (-31, (3, 3, 0, 1)),
        (-51, (3, 2, 2, 0)),
        (525, (3, 0, 1, 2)),
        (19, (2, 4, 1, 0)),
        (-325, (2, 2, 0, 2)),
        (260, (2, 1, 2, 1)),
        (-256, (2, 0, 4, 0)),
        (-2, (1, 6, 0, 0)),
        (105, (1, 3, 1, 1)),
        (76, (1, 2, 3, 0)),
        (625, (1, 1, 0, 3)),
        (-500, (1, 0, 2, 2)),
        (-58, (0, 5, 0, 1)),
        (3, (0, 4, 2, 0)),
        (2750, (0, 2, 1, 2)),
        (-2400, (0, 1, 3, 1)),
        (512, (0, 0, 5, 0)),
        (-3125, (0, 0, 0, 4)),
    ),
    2: (
        (9, (4, 0, 2, 0)),
        (-6, (3, 2, 1, 0)),
        (1, (2, 4, 0, 0)),
        (90, (2, 1, 1, 1)),
        (-136, (2, 0, 3, 0)),
        (-50, (1, 3, 0, 1)),
        (76, (1, 2, 2, 0)),
        (500, (1, 0, 1, 2)),
        (-8, (0, 4, 1, 0)),
        (625, (0, 2, 0, 2)),
        (-1400, (0, 1, 2, 1)),
        (400, (0, 0, 4, 0)),
    ),
    3: (
        (-15, (2, 1, 0, 1)),
        (-40, (2, 0, 2, 0)),
        (21, (1, 2, 1, 0)),
        (125, (1, 0, 0, 2)),
        (-2, (0, 4, 0, 0)),
        (-400, (0, 1, 1, 1)),
        (160, (0, 0, 3, 0)),
    ),
    4: (
        (-6, (2, 0, 1, 0)),
        (2, (1, 2, 0, 0)),
        (-50, (0, 1, 0, 1)),
        (40, (0, 0, 2, 0)),
    ),
    5: (
        (8, (0, 0, 1, 0)),
    ),
}
