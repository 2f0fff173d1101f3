"""Embedded reference eigenvalues for the regression commands.

Two published benchmark configurations of the Dirac-Morse resonance
problem are kept here so the regression suite runs offline.

Reference A (kappa = -1, natural fm units, energies on the 2M-scaled
fm^-2 axis): V0 = 6 fm^-2, r0 = 4 fm, alpha = 0.3 fm^-1, M = 0.5 fm^-1.
Columns: this method relativistic; this method in the nonrelativistic
limit (c x 100); the nonrelativistic J-matrix determination of Nasser
et al.; the S-matrix values of Rawitscher et al. (first three states
only).

Reference B (kappa = 2, atomic units hbar = m = 1): V0 = 10, r0 = 1,
alpha = 2.0.  Columns: relativistic; nonrelativistic limit; Nasser et
al. J-matrix.

None marks entries the reference does not provide.
"""

from __future__ import annotations

# --- Reference A: kappa = -1, fm units ---------------------------------

TABLE1_PARAMS = dict(V0=6.0, r0=4.0, alpha=0.3, M=0.5, kappa=-1)

TABLE1_RELATIVISTIC = [
    -8.1096 + 0.0000j,
    1.1745 - 0.0002j,
    5.6229 - 0.0349j,
    6.8906 - 1.3170j,
    7.3194 - 3.5858j,
    7.1143 - 6.0693j,
    6.3679 - 8.5999j,
    5.1514 - 11.0980j,
    3.5200 - 13.5209j,
    1.5173 - 15.8439j,
    -0.8212 - 18.0518j,
    -3.4656 - 20.1350j,
    -6.3907 - 22.0869j,
    -9.5750 - 23.9031j,
    -12.9998 - 25.5801j,
    -16.6491 - 27.1155j,
    -20.5088 - 28.5077j,
]

TABLE1_NONREL_LIMIT = [
    -8.1089 + 0.0000j,
    1.1779 - 0.0011j,
    5.6212 - 0.0303j,
    6.9041 - 1.3103j,
    7.3375 - 3.6189j,
    7.0545 - 6.0853j,
    6.3820 - 8.5374j,
    5.1806 - 11.1429j,
    3.4649 - 13.5147j,
    1.5262 - 15.8071j,
    -0.8167 - 18.0490j,
    -3.4773 - 20.1177j,
    -6.3930 - 22.0537j,
    -9.5671 - 23.8658j,
    -12.9859 - 25.5370j,
    -16.6258 - 27.0640j,
    -20.4731 - 28.4487j,
]

TABLE1_NASSER = [
    -8.1090 + 0.0000j,
    1.1778 - 2.01e-13j,
    5.6252 - 0.0351j,
    6.8911 - 1.3194j,
    7.3182 - 3.5887j,
    7.1111 - 6.0715j,
    6.3627 - 8.6005j,
    5.1446 - 11.0960j,
    3.5123 - 13.5151j,
    1.5095 - 15.8334j,
    -0.8278 - 18.0358j,
    -3.4697 - 20.1128j,
    -6.3907 - 22.0579j,
    -9.5691 - 23.8667j,
    -12.9861 - 25.5363j,
    -16.6255 - 27.0642j,
    None,
]

TABLE1_RAWITSCHER = [
    -8.1090 + 0.0000j,
    1.1783 + 0.0000j,
    5.6252 - 0.0351j,
] + [None] * 14

# --- Reference B: kappa = 2, atomic units ------------------------------

TABLE2_PARAMS = dict(V0=10.0, r0=1.0, alpha=2.0, M=1.0, kappa=2)

TABLE2_RELATIVISTIC = [
    -30.7047 + 0.0000j,
    10.8020 - 0.2822j,
    17.1419 - 12.3689j,
    11.1795 - 32.0868j,
    -4.8377 - 52.5443j,
    -29.3283 - 72.2381j,
]

TABLE2_NONREL_LIMIT = [
    -30.4136 + 0.0000j,
    10.9262 - 0.3026j,
    17.1244 - 12.5031j,
    11.0511 - 32.1914j,
    -5.0383 - 52.5395j,
    -29.5208 - 72.0565j,
]

TABLE2_NASSER = [
    -30.4139 + 0.0000j,
    10.9260 - 0.3027j,
    17.1240 - 12.5027j,
    11.0521 - 32.1906j,
    -5.0376 - 52.5407j,
    None,
]

# Tolerances used by the `reproduce` commands (absolute, per part).
TABLE1_TOL_FIRST3 = 1e-3
TABLE1_TOL = 1e-2
TABLE1_NASSER_TOL = 1e-2
TABLE2_TOL = 5e-2

# Oscillator lengths inside the stability plateau of each configuration.
TABLE1_B0 = 0.8
TABLE2_B0 = 0.25

# Doublet-analysis configuration (figure-style parameters, atomic units).
PSS_PARAMS = dict(V0=10.0, r0=1.0, alpha=0.5, M=1.0)
PSS_B0 = 0.25
PSS_THETA_DEG = 60.0
PSS_THETA_OFFSETS_DEG = (-5.0, 5.0)
PSS_FAMILIES = (-1, -2, -3, -4)

# Published aggregate splitting bounds over the scan ranges below.
PSS_DE_BOUND = 1.17
PSS_DGAMMA_BOUND = 1.04
PSS_SCAN_RANGES = dict(V0=(6.0, 14.0), r0=(0.5, 1.25), alpha=(0.3, 0.6))

# Default figure-scan ranges for the kappa = -1 fm-unit configuration.
FIG2_RANGES = dict(V0=(1.0, 10.0), r0=(3.0, 5.0), alpha=(0.2, 0.4))
FIG3_CURVES = dict(
    V0=(1.0, 6.0, 10.0),
    r0=(3.0, 4.0, 5.0),
    alpha=(0.2, 0.3, 0.4),
)
