"""Embedded golden fixtures.

Hand-checked reference data for the first 32 graphs of the family, the
8-vertex edge list, and the pendant-augmented 5-cycle used by the
general dom-path search. Everything is inlined so tests and the CSV
byte-for-byte contract need no network or files.
"""

# (n, back_degree, forward_degree, size, max_degree_set, domination_number,
#  diameter, max_degree)
REFERENCE_ROWS = (
    (1, 0, 1, 0, (1,), 0, 0, 0),
    (2, 1, 1, 1, (1, 2), 1, 1, 1),
    (3, 1, 2, 2, (2,), 1, 2, 2),
    (4, 1, 3, 3, (2, 3), 2, 3, 2),
    (5, 2, 3, 5, (3,), 2, 3, 3),
    (6, 2, 4, 7, (3, 4, 5), 2, 4, 3),
    (7, 3, 4, 10, (4, 5), 2, 4, 4),
    (8, 3, 5, 13, (5,), 2, 4, 5),
    (9, 3, 6, 16, (5, 6, 7), 2, 5, 5),
    (10, 4, 6, 20, (6, 7), 2, 5, 6),
    (11, 4, 7, 24, (7,), 2, 5, 7),
    (12, 4, 8, 28, (7, 8), 3, 5, 7),
    (13, 5, 8, 33, (8,), 3, 5, 8),
    (14, 5, 9, 38, (8, 9, 10), 3, 6, 8),
    (15, 6, 9, 44, (9, 10), 3, 6, 9),
    (16, 6, 10, 50, (10,), 3, 6, 10),
    (17, 6, 11, 56, (10, 11), 3, 6, 10),
    (18, 7, 11, 63, (11,), 3, 6, 11),
    (19, 7, 12, 70, (11, 12, 13), 3, 6, 11),
    (20, 8, 12, 78, (12, 13), 3, 6, 12),
    (21, 8, 13, 86, (13,), 3, 6, 13),
    (22, 8, 14, 94, (13, 14, 15), 3, 7, 13),
    (23, 9, 14, 103, (14, 15), 3, 7, 14),
    (24, 9, 15, 112, (15,), 3, 7, 15),
    (25, 9, 16, 121, (15, 16), 3, 7, 15),
    (26, 10, 16, 131, (16,), 3, 7, 16),
    (27, 10, 17, 141, (16, 17, 18), 3, 7, 16),
    (28, 11, 17, 152, (17, 18), 3, 7, 17),
    (29, 11, 18, 163, (18,), 3, 7, 18),
    (30, 11, 19, 174, (18, 19, 20), 3, 7, 18),
    (31, 12, 19, 186, (19, 20), 3, 7, 19),
    (32, 12, 20, 198, (20,), 3, 7, 20),
)

# byte-for-byte expected output of the csv table at max_n = 32
REFERENCE_CSV = """\
n,back_degree,forward_degree,size,max_degree_set,domination_number,diameter,max_degree
1,0,1,0,1,0,0,0
2,1,1,1,1;2,1,1,1
3,1,2,2,2,1,2,2
4,1,3,3,2;3,2,3,2
5,2,3,5,3,2,3,3
6,2,4,7,3;4;5,2,4,3
7,3,4,10,4;5,2,4,4
8,3,5,13,5,2,4,5
9,3,6,16,5;6;7,2,5,5
10,4,6,20,6;7,2,5,6
11,4,7,24,7,2,5,7
12,4,8,28,7;8,3,5,7
13,5,8,33,8,3,5,8
14,5,9,38,8;9;10,3,6,8
15,6,9,44,9;10,3,6,9
16,6,10,50,10,3,6,10
17,6,11,56,10;11,3,6,10
18,7,11,63,11,3,6,11
19,7,12,70,11;12;13,3,6,11
20,8,12,78,12;13,3,6,12
21,8,13,86,13,3,6,13
22,8,14,94,13;14;15,3,7,13
23,9,14,103,14;15,3,7,14
24,9,15,112,15,3,7,15
25,9,16,121,15;16,3,7,15
26,10,16,131,16,3,7,16
27,10,17,141,16;17;18,3,7,16
28,11,17,152,17;18,3,7,17
29,11,18,163,18,3,7,18
30,11,19,174,18;19;20,3,7,18
31,12,19,186,19;20,3,7,19
32,12,20,198,20,3,7,20
"""

J8_EDGES = (
    (1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (4, 6), (4, 7),
    (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8),
)

# 5-cycle 1..5, pendant partners 6..10, cross edges among the pendants
PETERSEN_EDGES = (
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
    (1, 6), (2, 7), (3, 8), (4, 9), (5, 10),
    (6, 8), (6, 9), (7, 9), (7, 10), (8, 10),
)
