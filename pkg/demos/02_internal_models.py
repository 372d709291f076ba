"""Internal models for the three benchmark disturbance generators.

Each follower carries a disturbance d_i = D_i w_i with dw_i = S_i w_i: a
constant offset, a linear ramp, and a unit-frequency harmonic.  For each
one the synthesis pipeline finds the minimal polynomial of S_i, builds
the companion pair (Phi, Psi), places the eigenvalues of F = Phi + G Psi
in the left half plane, and solves P F + F' P = -I as a certificate.
"""

import numpy as np

from dorsim import DisturbanceModel, minimal_polynomial, synthesize

generators = {
    "constant offset": DisturbanceModel(
        S=np.array([[0.0]]), D=np.array([1.0]), omega0=np.array([1.0])),
    "linear ramp": DisturbanceModel(
        S=np.array([[0.0, 1.0], [0.0, 0.0]]), D=np.array([1.0, 0.0]),
        omega0=np.array([1.0, 0.1])),
    "harmonic": DisturbanceModel(
        S=np.array([[0.0, 1.0], [-1.0, 0.0]]), D=np.array([1.0, 0.0]),
        omega0=np.array([1.0, 0.0])),
}

for name, dist in generators.items():
    coeffs = minimal_polynomial(dist.S)
    model = synthesize(dist)
    shown = tuple(round(c, 12) for c in coeffs)
    print(f"{name}:")
    print(f"  minimal polynomial coefficients (monic, descending): {shown}")
    print(f"  injection G = {model.G}")
    print(f"  eig(F) = {np.sort(np.linalg.eigvals(model.F).real)}")
    lyap = np.linalg.norm(
        model.P @ model.F + model.F.T @ model.P + np.eye(model.n_p))
    print(f"  Lyapunov residual |PF + F'P + I| = {lyap:.3g}")
    print()
