"""Published reference values for the two weaving families."""

from weaving.cyclotomic import IMAG, MINUS_ONE, ONE, SQRT3, THREE, CycloInt

# (det, V(w)) for W(p,2), p = 2..15
WP2_VALUES: dict[int, tuple[int, CycloInt]] = {
    2: (2, -IMAG),
    3: (5, MINUS_ONE),
    4: (12, SQRT3),
    5: (29, MINUS_ONE),
    6: (70, IMAG),
    7: (169, ONE),
    8: (408, -SQRT3),
    9: (985, ONE),
    10: (2378, -IMAG),
    11: (5741, MINUS_ONE),
    12: (13860, SQRT3),
    13: (33461, MINUS_ONE),
    14: (80782, IMAG),
    15: (195025, ONE),
}

# (det, V(w)) for W(3,n), n = 2..15
W3N_VALUES: dict[int, tuple[int, CycloInt]] = {
    2: (5, MINUS_ONE),
    3: (16, ONE),
    4: (45, THREE),
    5: (121, ONE),
    6: (320, MINUS_ONE),
    7: (841, ONE),
    8: (2205, THREE),
    9: (5776, ONE),
    10: (15125, MINUS_ONE),
    11: (39601, ONE),
    12: (103680, THREE),
    13: (271441, ONE),
    14: (710645, MINUS_ONE),
    15: (1860496, ONE),
}

# Jones polynomials of W(p,2), p = 2..9
WP2_JONES: dict[int, str] = {
    2: "-t^(1/2) - t^(5/2)",
    3: "t^-2 - t^-1 + 1 - t + t^2",
    4: "-t^(-3/2) + 2t^(-1/2) - 2t^(1/2) + 2t^(3/2) - 3t^(5/2) + t^(7/2) - t^(9/2)",
    5: "t^-4 - 2t^-3 + 4t^-2 - 5t^-1 + 5 - 5t + 4t^2 - 2t^3 + t^4",
    6: (
        "-t^(-7/2) + 3t^(-5/2) - 6t^(-3/2) + 9t^(-1/2) - 11t^(1/2) + 12t^(3/2)"
        " - 11t^(5/2) + 8t^(7/2) - 6t^(9/2) + 2t^(11/2) - t^(13/2)"
    ),
    7: (
        "t^-6 - 3t^-5 + 8t^-4 - 14t^-3 + 20t^-2 - 25t^-1 + 27"
        " - 25t + 20t^2 - 14t^3 + 8t^4 - 3t^5 + t^6"
    ),
    8: (
        "-t^(-11/2) + 4t^(-9/2) - 11t^(-7/2) + 22t^(-5/2) - 35t^(-3/2) + 48t^(-1/2)"
        " - 58t^(1/2) + 61t^(3/2) - 56t^(5/2) + 46t^(7/2) - 33t^(9/2) + 19t^(11/2)"
        " - 10t^(13/2) + 3t^(15/2) - t^(17/2)"
    ),
    9: (
        "t^-8 - 4t^-7 + 13t^-6 - 29t^-5 + 53t^-4 - 82t^-3 + 110t^-2 - 131t^-1 + 139"
        " - 131t + 110t^2 - 82t^3 + 53t^4 - 29t^5 + 13t^6 - 4t^7 + t^8"
    ),
}

W32_JONES = "t^-2 - t^-1 + 1 - t + t^2"
