"""Frozen expected values shared across test modules.

Term listings were cross-checked against an independent dense scan
before freezing; see the differential tests next to each consumer.
"""

S2_TERMS_TO_1000 = [
    1, 5, 10, 11, 15, 25, 50, 51, 52, 100, 101, 105, 110, 111, 115, 125,
    150, 151, 152, 205, 215, 250, 251, 255, 357, 375, 455, 500, 501, 502,
    510, 511, 512, 520, 521, 525, 537, 545, 552, 554, 573, 735, 753, 1000,
]

S3_TERMS_TO_1000 = [
    1, 2, 3, 5, 8, 10, 11, 12, 13, 15, 18, 20, 21, 24, 25, 27, 30, 31, 42,
    45, 50, 51, 52, 54, 55, 56, 57, 65, 72, 75, 80, 81, 100, 101, 102,
    103, 105, 108, 110, 111, 112, 113, 115, 118, 120, 121, 124, 125, 127,
    130, 131, 142, 145, 150, 151, 152, 154, 155, 156, 157, 165, 172, 175,
    180, 181, 200, 201, 204, 205, 207, 210, 211, 214, 215, 217, 222, 225,
    235, 240, 241, 250, 251, 252, 253, 255, 258, 270, 271, 285, 300, 301,
    310, 311, 325, 352, 355, 377, 402, 405, 412, 415, 420, 421, 445, 450,
    451, 454, 455, 457, 475, 478, 487, 500, 501, 502, 504, 505, 506, 507,
    510, 511, 512, 514, 515, 516, 517, 520, 521, 522, 523, 525, 528, 532,
    535, 540, 541, 544, 545, 547, 550, 551, 552, 553, 554, 558, 560, 561,
    570, 571, 574, 582, 585, 605, 615, 650, 651, 679, 697, 702, 705, 712,
    715, 720, 721, 737, 745, 748, 750, 751, 754, 769, 773, 784, 796, 800,
    801, 810, 811, 825, 847, 852, 855, 874, 967, 976, 1000,
]

S4_TERMS_TO_1000 = [
    1, 10, 11, 25, 52, 100, 101, 110, 111, 125, 152, 205, 215, 250, 251,
    455, 502, 512, 520, 521, 545, 554, 1000,
]

SQUARE_THREE_STEP_TERMS_TO_1E8 = [
    55225, 175561, 255025, 755161, 1175056, 1755625, 5175625, 5522500,
    7155625, 17556100, 20557156, 25050025, 25502500, 25755625, 56175025,
    75255625, 75516100,
]

CANDIDATE_ROOTS_TO_10000 = [
    1, 5, 10, 39, 50, 100, 105, 390, 500, 501, 715, 718, 1000, 1005, 1050,
    1235, 3749, 3900, 4745, 5000, 5001, 5010, 5015, 7150, 7152, 7180,
    10000,
]
