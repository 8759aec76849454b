"""Machine encoding of the ideal tables and the layered extension tables.

Polynomial templates are ASCII expressions over the ring variables plus
the placeholders a, b, c (structure constants mod p), P (the formal
uniformizer), d11s/d22s/d33s (unit stand-ins, expanded to dbar*(1+x_iis)
at instantiation), and the existential constants xbar, zbar1, zbar2.

Row groups: "height" and "divisor" are the two finite-height generator
groups; "mon" carries the monodromy generators, printed without their
high p-order tails and only usable once the uniformizer specializes to 0.
"""

# family A: rows presented on the 16-variable ring with e11
FAMILY_A_VARS = ("c11", "x11s", "e11", "c12", "c13", "d21", "c21", "c22",
                 "x22s", "c23", "d31", "c31", "d32", "c32", "c33", "x33s")
# family B: rows presented on the 15-variable ring with e13, e23, e33
FAMILY_B_VARS = ("x11s", "c12", "c13", "e13", "d21", "c22", "x22s", "c23",
                 "e23", "d31", "d32", "c32", "c33", "e33", "x33s")

UNIT_STANDINS = ("d11s", "d22s", "d33s")

# shift conventions for the derived (a, b, c) triple
SHIFT_ONE = (1, 1, 1)
SHIFT_W0ETA = (0, 1, 2)

TABLE_FAMILY = {
    "1": "A", "2": "A", "3": "B", "4": "A", "5": "B", "6": "A", "7": "B",
    "B11": "A", "lamA": "A", "lamB": "B",
}
TABLE_SHIFT = {
    "1": SHIFT_ONE, "2": SHIFT_ONE, "3": SHIFT_W0ETA, "4": SHIFT_ONE,
    "5": SHIFT_W0ETA, "6": SHIFT_ONE, "7": SHIFT_W0ETA,
    "B11": SHIFT_ONE, "lamA": SHIFT_ONE, "lamB": SHIFT_W0ETA,
}

# ---------------------------------------------------------------- table 1
TABLE_1 = {
    "abag_t1": {
        "height": [
            "c13", "c23", "c32 + P*d32", "c33 + P*d33s",
        ],
        "divisor": [
            "c21", "c22", "c11 - P*d11s", "e11 - P^2*d11s",
        ],
        "mon": [
            "(a-c-1)*d22s*c31 + (b-c-1)*d21*d32 + P*d31*d22s",
        ],
    },
    "aba_t1": {
        "height": [
            "e11", "c21", "c22", "c23", "c32 + P*d32", "c33 + P*d33s",
        ],
        "divisor": [
            "c13*d32 - c12*d33s",
            "c13*d31 - c11*d33s + P*d11s*d33s",
            "c13*c31 + P*c11*d33s",
        ],
        "mon": [
            "(b-c)*d21*c12 + (c-a)*c11*d22s - P*d11s*d22s",
            "P*(b-c)*d21*d32 + (a-c+1)*c31*d22s + P*d31*d22s",
        ],
    },
    "ab_t1": {
        "height": [
            "e11", "c22 + P*d22s", "c32 + P*d32", "c33 + P*d33s",
        ],
        "divisor": [
            "c13*d32 - c12*d33s",
            "c31*d22s - d32*c21",
            "c23*d32 + P*d22s*d33s",
            "c13*c21 - c23*c11",
            "c11*d33s - d31*c13 - P*d11s*d33s",
        ],
        "mon": [
            "(b-c)*d21*c12 + (c-a)*c11*d22s + P*(b-c-1)*d11s*d22s",
            "(b-c-1)*c23*d31 + (a-b+1)*c21*d33s + P*(b-c)*d21*d33s",
        ],
    },
}

# ---------------------------------------------------------------- table 2
TABLE_2 = {
    "ba_t1": {
        "height": [
            "e11", "c21", "c22", "c23", "c31 + P*d31", "c33 + P*d33s",
        ],
        "divisor": [
            "c11*d33s - c13*d31",
            "c13*c32 + P*d33s*c12",
            "d21*(c13*d32 - c12*d33s) - P*d11s*d22s*d33s",
        ],
        "mon": [
            "(b-c)*d21*c12 + (c-a)*c11*d22s - P*d11s*d22s",
            "(a-c)*c12*d31 + (c-a)*c11*d32 + (c-b-1)*c32*d11s - P*d32*d11s",
        ],
    },
    "t1": {
        "height": [
            "e11", "c21 + P*d21", "c31 + P*d31", "c32 + P*d32",
        ],
        "divisor": [
            "c23*d31 - d21*c33",
            "c12*d31 - c11*d32",
            "c13*c22 - c12*c23",
            "P*c13*d32 + c12*c33",
            "c22*d31 + P*d21*d32",
            "P*c13*d31 + c11*c33",
            "P*c13*d21 + c11*c23",
            "P*c12*d21 + c11*c22",
            "c13*d21*d32 - c12*d21*d33s - c13*d31*d22s - c23*d32*d11s"
            " + c11*d22s*d33s + d11s*c22*d33s + d11s*d22s*c33",
            "c12*d21*c33 - c11*c22*d33s - c11*d22s*c33 - d11s*c22*c33"
            " - P*(c11*d22s*d33s + d11s*c22*d33s + d11s*d22s*c33)",
        ],
        "mon": [
            "(a-c-1)*(c23*d32 - c33*d22s) - (a-b-1)*c22*d33s + P*d11s*d22s*d33s",
            "(a-b)*(c13*d31 - c11*d33s) + (b-c-1)*c33*d11s - P*d11s*d22s*d33s",
            "(b-c)*(c12*d21 - c22*d11s) - (a-c)*c11*d22s - P*d11s*d22s*d33s",
        ],
    },
}

# ---------------------------------------------------------------- table 3
TABLE_3 = {
    "twe": {
        "height": ["d21", "d31", "c32 + P*d32"],
        "divisor": ["e33", "c33", "d32", "e23", "c22"],
        "mon": [
            "(a-b)*c12*c23 + P*c13*d22s - (a-c)*e13*d22s",
        ],
    },
    "twe_a": {
        "height": ["c22 + P*d22s", "c32 + P*d32", "d31"],
        "divisor": [
            "e33", "c33", "d32",
            "e13*d21 - e23*d11s",
            "c12*d21 + P*d11s*d22s",
        ],
        "mon": [
            "(b-a)*c12*c23 + P*(b-a-1)*c13*d22s + (a-c)*e13*d22s",
        ],
    },
    "twe_b": {
        "height": ["d21", "d31", "e33 + P*c33 + P^2*d33s"],
        "divisor": [
            "c32", "e23", "c22",
            "c33 + P*d33s",
            "c23*d32 + P*d22s*d33s",
        ],
        "mon": [
            "(a-b)*c12*c23 + P*c13*d22s - (a-c)*e13*d22s",
        ],
    },
    "twe_w0": {
        "height": [
            "P*d32 + c32", "P*c23 + e23", "e33 + P*c33 + P^2*d33s",
        ],
        "divisor": [
            "e13*d32 - c12*c33 - P*c12*d33s",
            "c23*d31 - d21*c33 - P*d21*d33s",
            "c12*d31 + P*d32*d11s",
            "e13*d21 + P*c23*d11s",
            "c12*d21 - c22*d11s",
            "c13*d21*d32 - c13*d31*d22s - c23*d32*d11s + c33*d11s*d22s",
            "e13*d31 + P*c33*d11s + P^2*d33s*d11s",
        ],
        "mon": [
            "(b-a)*(c13*c22 - c12*c23) + P*c13*d22s + (c-a)*e13*d22s",
            "(c-a-1)*(c23*d32 - c33*d11s) - (b-a)*c22*d33s - P*(c-a)*d11s*d33s",
            "(b-a-1)*c13*d31 + (c-b)*c33*d11s + P*(c-a)*d11s*d33s",
        ],
    },
}

# ------------------------------------------------- table 4 (mod p, pairs)
TABLE_4 = {
    "aba_ab": {
        "elements": [
            "e11", "c33", "c32",
            "c23*d32 - c22*d33s",
            "c13*d32 - c12*d33s",
            "c23*c31", "c13*c31",
            "c13*d31 - c11*d33s",
            "c22*c23", "c21*c22",
            "c13*c21 - c11*c23",
            "c21^2*d32 - c21*c31*d22s",
            "(b-c)*d21*c22*d33s + (c-b+1)*c23*d31*d22s + (b-a-1)*c21*d22s*d33s",
            "(b-c)*c12*d21 + xbar*c11*c22 - (a-c)*c11*d22s - (b-c)*c22*d11s",
            "(b-c)*d21*c22*d32 + c22*d31*d22s + c21*c32*d22s"
            " + (a-c+1)*d22s*(c31*d22s - c21*d32)",
        ],
    },
    "aba_ba": {
        "elements": [
            "e11", "c33", "c23", "c22", "c21",
            "c31*c32", "c13*c32", "c11*c32", "c13*c31", "c12*c31",
            "c13*d21*d32 - c12*d21*d33s - c13*d31*d22s + c11*d22s*d33s",
            "c13^2*d31*d32 - c12*c13*d31*d33s - c11*c13*d32*d33s + c11*c12*d33s^2",
            "(a-b)*c13*d31*d32 - (a-c)*c12*d31*d33s + (b-c)*c11*d32*d33s"
            " + (b-c+1)*c32*d11s*d33s",
            "(b-c)*c12*d21*d31 - (a-b)*c13*d31^2 - (b-c)*c11*d21*d32"
            " + (a-b)*c11*(d31*d22s - d21*c32)"
            " - c31*d22s*((a-c)*c11 - (a-c+1)*d11s)",
            "zbar1*(c12*c13*d21*d31 - c11*c12*d21*d33s)"
            " + zbar2*(c11^2*d22s*d33s - c11*c13*d31*d11s)"
            " + (b-c)*c12*d21*d11s*d33s - (a-c)*c11*d11s*d22s*d33s",
        ],
    },
    "w0_pair_intersect": {
        "elements": [
            "e11", "c33",
            "c31*c32", "c23*c32", "c21*c32", "c13*c32", "c11*c32",
            "c23*d32 - c22*d33s",
            "c23*c31", "c13*c31", "c12*c31",
            "c22*c23", "c21*c22",
            "c13*c22 - c12*c23",
            "c13*c21 - c11*c23",
            "c12*c21 - c11*c22",
            "c21^2*d32 - c21*c31*d22s",
            "c13*d21*d32 - c12*d21*d33s - c13*d31*d22s + c11*d22s*d33s",
            "c13^2*d31*d32 - c12*c13*d31*d33s - c11*c13*d32*d33s + c11*c12*d33s^2",
            "(b-c)*d21*c22*d33s - (b-c-1)*c23*d31*d22s - (a-b+1)*c21*d22s*d33s",
            "(a-b)*c13*d31*d32 - (a-c)*c12*d31*d33s + (b-c)*c11*d32*d33s"
            " + (b-c+1)*c32*d11s*d33s",
            "(b-c)*(c12*d21*d31 - c11*d21*d32 - c22*d31*d11s - c21*d32*d11s)"
            " + (a-b)*d31*(c11*d33s - c13*d31)"
            " + (c-a-1)*c31*d11s*d33s",
            "zbar1*c12*d21*(c13*d31 - c11*d33s)"
            " + zbar2*c11*d22s*(c11*d33s - c13*d31)"
            " - (b-c)*(c12*d21 - c22*d11s)*d11s*d33s"
            " - xbar*c11*c22*d11s*d33s + (a-c)*c11*d11s*d22s*d33s",
        ],
    },
}

# ------------------------------------------------- table 5 (mod p, pairs)
TABLE_5 = {
    "twe_twea": {
        "elements": [
            "e33", "c33", "c32", "d32", "d31",
            "d21*c22",
            "e13*d21 - e23*d11s",
            "c12*d21 - c22*d11s",
            "(a-b)*(c13*c22 - c12*c23) - xbar*c12*e23 + (a-c)*e13*d22s",
        ],
    },
    "twe_tweb": {
        "elements": [
            "e33", "c32", "d31", "e23", "c22", "d21",
            "d32*c33",
            "c23*d32 - c33*d22s",
            "zbar1*c33*c12*c23 + zbar2*c33*e13*d22s"
            " - (a-b)*c12*c23*d33s + (a-c)*e13*d22s*d33s",
        ],
    },
    "twe_pair_intersect": {
        "elements": [
            "e33", "c32", "d31",
            "d32*c33",
            "c23*d32 - c33*d22s",
            "d21*d32", "d21*c22",
            "e13*d21 - e23*d11s",
            "c12*d21 - c22*d11s",
            "zbar1*c33*c12*c23 + zbar2*c33*e13*d22s"
            " + (a-b)*d33s*(c13*c22 - c12*c23)"
            " - xbar*c12*e23*d33s + (a-c)*e13*d22s*d33s",
        ],
    },
}

# ------------------------------------ table 6 (component primes, family A)
TABLE_6 = {
    "(0,0)": {
        "gens": ["e11", "c33", "c32", "c31", "c23", "c22", "c21", "c13",
                 "c12", "c11"],
    },
    "(e1,0)": {
        "gens": ["e11", "c33", "c32", "d32", "c31", "d31", "c22", "c21",
                 "c12", "c11"],
    },
    "(e2,0)": {
        "gens": ["e11", "c33", "c32", "c31", "d31", "c23", "c22", "c21",
                 "d21", "c11"],
    },
    "(0,1)": {
        "gens": [
            "e11", "c33", "c32", "c31", "c23", "c22", "c21",
            "c13*d32 - c12*d33s",
            "c13*d31 - c11*d33s",
            "c12*d31 - c11*d32",
            "(b-c)*d21*d32 - (a-c)*d31*d22s",
            "(b-c)*c12*d21 - (a-c)*c11*d22s",
        ],
    },
    "(e1,1)": {
        "gens": [
            "e11", "c33", "c32", "c31", "d31", "c21", "c11",
            "c13*c22 - c12*c23",
            "c13*d21 - c23*d11s",
            "c12*d21 - c22*d11s",
            "(a-c-1)*c23*d32 - (a-b-1)*c22*d33s",
            "(a-c-1)*c13*d32 - (a-b-1)*c12*d33s",
        ],
    },
    "(e2,1)": {
        "gens": [
            "e11", "c32", "c31", "c22", "c21", "c12", "c11",
            "c23*d32 - c33*d22s",
            "d21*d32 - d31*d22s",
            "c23*d31 - d21*c33",
            "(a-b)*c13*d31 + (b-c-1)*c33*d11s",
            "(a-b)*c13*d21 + (b-c-1)*c23*d11s",
        ],
    },
    "(e2-e1,1)": {
        "gens": [
            "e11", "c33", "c32", "d32", "c31", "c22", "c13", "c12", "c11",
            "(b-c-1)*c23*d31 + (a-b+1)*c21*d33s",
        ],
    },
    "(e1-e2,1)": {
        "gens": [
            "e11", "c33", "c31", "c23", "c22", "c21", "d21", "c13", "c11",
            "(a-c)*c12*d31 - (b-c+1)*c32*d11s",
        ],
    },
}

# ------------------------------------ table 7 (component primes, family B)
TABLE_7 = {
    "(0,0)": {
        "gens": ["e33", "c33", "c32", "e23", "c23", "c22", "e13", "c13",
                 "c12"],
    },
    "(e1,0)": {
        "gens": ["e33", "c32", "d31", "d32", "c33", "c22", "c12", "e13",
                 "e23"],
    },
    "(e2,0)": {
        "gens": ["e33", "c33", "c32", "d31", "e23", "c23", "c22", "d21",
                 "e13"],
    },
    "(e1,1)": {
        "gens": [
            "e33", "c32", "e23", "c22", "e13", "c12",
            "d21*c33 - c23*d31",
            "d21*d32 - d31*d22s",
            "c23*d32 - c33*d22s",
            "(a-b+1)*c13*d31 + (b-c)*c33*d11s",
            "(a-b+1)*c13*d21 + (b-c)*c23*d11s",
        ],
    },
    "(e2,1)": {
        "gens": [
            "e33", "c33", "c32", "d31", "e23", "e13",
            "c12*c23 - c13*c22",
            "c12*d21 - c22*d11s",
            "c13*d21 - c23*d11s",
            "(a-c+1)*c23*d32 - (a-b)*c22*d33s",
            "(a-c+1)*c13*d32 - (a-b)*c12*d33s",
        ],
    },
    "(e1+e2,1)": {
        "gens": [
            "e33", "c32", "d31", "e23", "d32", "c33", "d21", "c22",
            "(a-b)*c12*c23 - (a-c)*e13*d22s",
        ],
    },
}

# --------- appendix coprimality computations: displayed partial ideals of
# --------- the two length-one rows not presented in tables 1-3
TABLE_B11 = {
    "bt1_sub": {
        "gens": [
            "c11*d33s - c13*d31",
            "P*d21*d33s + c23*d31",
            "P*c12*d33s + c13*c32",
        ],
    },
    "at1_sub": {
        "gens": [
            "c32 + P*d32",
            "c13*d21*d32 - c12*d21*d33s - P*d11s*d22s*d33s",
        ],
    },
}

# --------- intersection presentations asserted by the wedge lemmas
TABLE_LAMBDA_A = {
    "lam": {
        "gens": ["c22", "c33", "d32*c23", "c13*d31 - c11*d33s"],
    },
}
TABLE_LAMBDA_B = {
    "lam": {
        "gens": [
            "c22", "c33", "c32", "e33", "e23", "d31",
            "(a-b)*c12*c23 - (a-c)*e13*d22s",
            "d21*d32", "c23*d32", "d21*c12",
        ],
    },
}

# --------- layered extension tables for the projective-cover layers
# entries: layer index -> list of (upper, lower) alcove-label extensions,
# with multiplicity; "C+G" denotes the length-3 glued extension.
EXT_Q1_B = {
    "weyl": {
        1: ["(C,B)", "(D,B)"],
        2: ["(E,C)", "(E,A)", "(E,D)", "(F,C)", "(F,A)", "(F,D)"],
        3: ["(C,B)", "(C,B)"],
        4: ["(E,A)"],
        5: ["(C,B)"],
    },
    "dualweyl": {
        0: ["(B,C)", "(B,A)", "(B,D)"],
        1: ["(D,E)", "(C,F)"],
        2: ["(E,G)"],
        3: ["(D,E)", "(C,F)"],
        4: ["(B,C)", "(B,D)"],
    },
}

EXT_Q1_A = {
    "weyl": {
        1: ["(E,A)", "(B,A)", "(F,A)"],
        2: ["(A,B)", "(A,B)"],
        3: ["(E,A)", "(E,A)", "(F,A)"],
        5: ["(E,A)"],
    },
    "dualweyl": {
        0: ["(A,E)", "(A,F)"],
        1: ["(B,D)", "(B,C)", "(F,D)", "(E,C)", "(F,I)", "(F,G)", "(E,H)"],
        2: ["(A,E)", "(A,E)", "(A,F)", "(A,F)", "(C+G,J)"],
        3: ["(F,I)", "(F,G)", "(E,H)", "(B,D)", "(B,D)", "(B,C)", "(B,C)"],
        4: ["(A,F)", "(A,B)", "(A,E)"],
    },
    "other": {
        0: ["(A,B)"],
    },
}

TABLES = {
    "1": TABLE_1,
    "2": TABLE_2,
    "3": TABLE_3,
    "4": TABLE_4,
    "5": TABLE_5,
    "6": TABLE_6,
    "7": TABLE_7,
    "B11": TABLE_B11,
    "lamA": TABLE_LAMBDA_A,
    "lamB": TABLE_LAMBDA_B,
}

EXISTENTIAL_NAMES = ("xbar", "zbar1", "zbar2")
