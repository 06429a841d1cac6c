"""Values transcribed from the printed level and shift tables (Z = 1, c = 137.03599976)."""

# (n, kappa) -> energy
TABLE1 = {
    (1, "1/2"): -2.000106514052,
    (2, "1/2"): -0.222234057055,
    (2, "-1/2"): -0.222234057055,
    (2, "3/2"): -0.222223537086,
    (3, "1/2"): -0.080002897124,
    (3, "-1/2"): -0.080002897124,
    (3, "3/2"): -0.080000624824,
    (3, "-3/2"): -0.080000624824,
    (3, "5/2"): -0.080000170405,
}

# (n, kappa) -> (E1 for mu = +|kappa|, nonrelativistic value for mu = +|kappa|)
TABLE2 = {
    (1, "1/2"): (0.49997337, 0.5),
    (2, "3/2"): (0.99999112, 1.0),
    (3, "5/2"): (1.49999467, 1.5),
    (2, "1/2"): (0.49999704, 0.5),
    (2, "-1/2"): (-2.9586e-6, 0.0),
    (3, "3/2"): (0.99999680, 1.0),
    (3, "-3/2"): (0.49999680, 0.5),
    (3, "1/2"): (0.49999899, 0.5),
    (3, "-1/2"): (-1.0651e-6, 0.0),
}

# independent 40-digit evaluation (mpmath recurrence + adaptive quadrature)
E1_MPMATH = {
    (1, "1/2"): 0.499973372904998,
    (2, "3/2"): 0.99999112472182,
    (3, "5/2"): 1.49999467485326,
    (2, "1/2"): 0.49999704143389,
    (2, "-1/2"): -2.95856611049386e-6,
    (3, "3/2"): 0.999996804893806,
    (3, "-3/2"): 0.499996804893806,
    (3, "1/2"): 0.499998934934351,
    (3, "-1/2"): -1.06506564884682e-6,
}
