#!/usr/bin/env python3
"""Regenerate the corpus/ directory of Bieberbach group presentations.

Development-time tool (requires sympy). The five presentations whose natural
lattice is hexagonal (O4_18, O4_19, O4_20, O4_25, N4_42) carry sqrt(3) entries
in their source coordinates; they are conjugated into lattice coordinates
(by (B^-1, 0), B = listed lattice generators as columns), which makes every
matrix and translation entry rational and sends the lattice generators to the
standard basis. All other presentations are emitted verbatim.

Usage: python tools/make_corpus.py [outdir]
"""

import json
import pathlib
import sys

import sympy as sp

R1 = sp.Rational(1)
H = sp.Rational(1, 2)
Q4 = sp.Rational(1, 4)
T3 = sp.Rational(1, 3)
S6 = sp.Rational(1, 6)


def e(i, *coeffs):
    """Vector sum(c * e_k for (k, c) in coeffs) in R^4, 1-based indices."""
    v = [sp.Integer(0)] * 4
    for k, c in coeffs:
        v[k - 1] += c
    return sp.Matrix(v)


def diag(*entries):
    return sp.diag(*[sp.Integer(x) for x in entries])


def rot(theta):
    return sp.Matrix([[sp.cos(theta), -sp.sin(theta)], [sp.sin(theta), sp.cos(theta)]])


def block(m1, m2):
    return sp.Matrix(sp.BlockDiagMatrix(m1, m2))


E0 = diag(1, -1)
ID2 = sp.eye(2)

# Point generators are (matrix, translation) pairs; lattice generators are
# plain vectors (their matrix part is the identity).
GROUPS = []


def g(name, lattice, gens):
    GROUPS.append((name, lattice, gens))


STD = [e(1, (1, R1)), e(2, (2, R1)), e(3, (3, R1)), e(4, (4, R1))]

# --- holonomy Z2^2, four distinct 1-dim components -------------------------
g("O4_9", STD, [
    (diag(-1, 1, -1, 1), e(2, (2, H))),
    (diag(-1, -1, 1, 1), e(4, (4, H))),
])
g("O4_10", STD, [
    (diag(1, -1, -1, 1), e(1, (1, H), (2, H))),
    (diag(-1, -1, 1, 1), e(4, (4, H))),
])
g("O4_11", STD, [
    (diag(-1, -1, 1, 1), e(3, (3, H))),
    (diag(1, -1, -1, 1), e(1, (1, H), (2, H), (4, H))),
])
g("O4_12", [e(1, (1, R1), (2, -R1)), e(1, (1, R1), (2, R1)), STD[2], STD[3]], [
    (diag(-1, -1, 1, 1), e(3, (3, H))),
    (diag(1, -1, -1, 1), e(4, (4, H))),
])
g("O4_13", [e(2, (2, H), (3, -H)), e(2, (2, H), (3, H)), e(1, (1, H), (2, -H)), STD[3]], [
    (diag(-1, 1, -1, 1), e(1, (1, Q4), (3, Q4), (4, H))),
    (diag(1, 1, -1, -1), e(1, (1, Q4), (2, -Q4), (4, H))),
])
g("O4_14", STD, [
    (diag(1, -1, -1, 1), e(1, (1, H), (2, H))),
    (diag(-1, 1, -1, 1), e(1, (1, -H), (2, H), (3, -H))),
])
g("O4_15", [STD[0], STD[1], STD[2], e(1, (1, H), (2, H), (3, H), (4, H))], [
    (diag(1, -1, 1, -1), e(3, (3, H))),
    (diag(1, -1, -1, 1), e(1, (1, H))),
])
g("O4_16", [e(1, (1, H), (2, H), (3, -H)), e(1, (1, -H), (2, H), (3, H)),
            e(1, (1, H), (2, -H), (3, H)), STD[3]], [
    (diag(-1, -1, 1, 1), e(1, (1, -R1), (2, -R1), (3, H), (4, H))),
    (diag(-1, 1, 1, -1), e(2, (2, H))),
])
g("O4_17", [e(1, (1, R1), (2, -R1)), e(1, (1, R1), (2, R1)), STD[2], STD[3]], [
    (diag(-1, 1, 1, -1), e(1, (1, R1), (3, H))),
    (diag(1, 1, -1, -1), e(1, (1, -R1), (3, -H), (4, -H))),
])

# --- holonomy Z2^3 ----------------------------------------------------------
g("N4_30", STD, [
    (diag(-1, 1, 1, 1), e(3, (3, H))),
    (diag(-1, 1, -1, 1), e(2, (2, H), (3, -H))),
    (diag(-1, -1, 1, 1), e(4, (4, H))),
])
g("N4_31", STD, [
    (diag(1, 1, -1, 1), e(2, (2, H))),
    (diag(1, -1, -1, 1), e(1, (1, H), (2, -H))),
    (diag(-1, -1, 1, 1), e(1, (1, H), (4, H))),
])
g("N4_32", STD, [
    (diag(-1, 1, 1, 1), e(3, (3, H))),
    (diag(-1, 1, -1, 1), e(2, (2, H), (3, -H))),
    (diag(-1, -1, 1, 1), e(1, (1, H), (4, H))),
])
g("N4_33", STD, [
    (diag(-1, 1, 1, 1), e(3, (3, H))),
    (diag(-1, 1, -1, 1), e(2, (2, H), (3, -H))),
    (diag(-1, -1, 1, 1), e(1, (1, H), (3, H), (4, H))),
])
g("N4_34", STD, [
    (diag(-1, 1, 1, 1), e(3, (3, H))),
    (diag(-1, 1, -1, 1), e(1, (1, H), (2, H), (3, H))),
    (diag(-1, -1, 1, 1), e(1, (1, H), (4, H))),
])
g("N4_35", STD, [
    (diag(-1, 1, 1, 1), e(3, (3, H))),
    (diag(-1, 1, -1, 1), e(1, (1, H), (2, H), (3, -H))),
    (diag(1, -1, -1, 1), e(2, (2, -H), (4, H))),
])
g("N4_36", STD, [
    (diag(-1, 1, 1, 1), e(3, (3, H))),
    (diag(-1, 1, -1, 1), e(1, (1, -H), (2, H), (3, -H))),
    (diag(-1, -1, 1, 1), e(4, (4, H))),
])
g("N4_37", STD, [
    (diag(1, 1, -1, 1), e(2, (2, H))),
    (diag(1, -1, -1, 1), e(1, (1, H), (2, -H), (3, -H))),
    (diag(-1, -1, 1, 1), e(1, (1, H), (3, H), (4, H))),
])
g("N4_38", STD, [
    (diag(-1, 1, -1, 1), e(2, (2, H))),
    (diag(1, -1, -1, 1), e(1, (1, -H), (2, H), (3, -H))),
    (diag(-1, 1, 1, 1), e(4, (4, H))),
])
g("N4_39", STD, [
    (diag(-1, 1, -1, 1), e(2, (2, H), (3, -H))),
    (diag(-1, -1, 1, 1), e(1, (1, H), (3, H))),
    (diag(1, 1, -1, 1), e(2, (2, H), (4, H))),
])
g("N4_45", STD, [
    (diag(1, -1, -1, -1), e(1, (1, -H), (2, -H))),
    (diag(-1, -1, 1, 1), e(1, (1, H), (4, H))),
    (diag(1, -1, -1, 1), e(1, (1, -H), (3, -H))),
])
g("N4_46", STD, [
    (diag(-1, 1, -1, -1), e(2, (2, H))),
    (diag(-1, -1, 1, 1), e(1, (1, H), (4, H))),
    (diag(-1, 1, -1, 1), e(2, (2, H), (3, -H))),
])

# --- holonomy A4 and A4 x Z2 ------------------------------------------------
g("O4_26", STD, [
    (diag(1, 1, -1, -1), e(2, (2, -H), (4, -H))),
    (diag(1, -1, -1, 1), e(3, (3, H), (4, H))),
    (sp.Matrix([[1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]]),
     e(1, (1, T3), (2, H), (4, -H))),
])
g("O4_27", [STD[0], e(1, (1, -H), (2, H), (3, -H), (4, H)),
            e(1, (1, -H), (2, H), (3, H), (4, -H)), e(1, (1, H), (2, -H), (3, H), (4, H))], [
    (diag(1, -1, 1, -1), e(1, (1, H), (3, H), (4, H))),
    (diag(1, -1, -1, 1), e(2, (2, -H), (4, H))),
    (sp.Matrix([[1, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1], [0, 1, 0, 0]]),
     e(1, (1, S6), (3, H))),
])
g("N4_43", STD, [
    (diag(1, 1, -1, -1), e(2, (2, H), (3, H))),
    (diag(1, -1, -1, 1), e(2, (2, H), (4, -H))),
    (sp.Matrix([[1, 0, 0, 0], [0, 0, 0, -1], [0, 1, 0, 0], [0, 0, 1, 0]]),
     e(1, (1, S6))),
])

# --- holonomy Z2^2 with a 2-dim isotypic component --------------------------
g("N4_3", STD, [
    (diag(1, 1, 1, -1), e(2, (2, H))),
    (diag(1, 1, -1, -1), e(1, (1, H), (2, H))),
])
g("N4_4", STD, [
    (diag(1, 1, 1, -1), e(2, (2, H))),
    (diag(1, 1, -1, -1), e(1, (1, H), (2, H), (4, H))),
])
g("N4_5", STD, [
    (diag(1, 1, -1, 1), e(1, (1, H), (4, H))),
    (diag(1, 1, -1, -1), e(1, (1, H), (2, H), (3, H), (4, -H))),
])
g("N4_6", [STD[0], STD[1], STD[2], e(3, (3, H), (4, H))], [
    (diag(1, 1, 1, -1), e(2, (2, H))),
    (diag(1, 1, -1, -1), e(1, (1, H), (2, H))),
])
g("N4_7", [STD[0], STD[1], e(1, (1, H), (3, H)), e(1, (1, H), (4, H))], [
    (diag(1, 1, 1, -1), e(1, (1, Q4), (3, Q4))),
    (diag(1, 1, -1, -1), e(1, (1, H), (2, H), (3, -Q4), (4, Q4))),
])
g("N4_8", STD, [
    (diag(1, 1, 1, -1), e(3, (3, H))),
    (diag(1, 1, -1, -1), e(2, (2, H), (3, -H))),
])
g("N4_9", STD, [
    (diag(1, 1, 1, -1), e(3, (3, H))),
    (diag(1, 1, -1, -1), e(2, (2, H), (3, -H), (4, H))),
])
g("N4_10", [STD[0], STD[1], e(1, (1, H), (3, H)), STD[3]], [
    (diag(1, 1, 1, -1), e(1, (1, H))),
    (diag(1, 1, -1, -1), e(1, (1, H), (2, H))),
])
g("N4_11", [STD[0], STD[1], e(1, (1, H), (3, H)), STD[3]], [
    (diag(1, 1, -1, 1), e(4, (4, H))),
    (diag(1, 1, -1, -1), e(2, (2, H), (4, H))),
])
g("N4_12", [STD[0], STD[1], e(1, (1, H), (3, H)), STD[3]], [
    (diag(1, 1, 1, -1), e(1, (1, H))),
    (diag(1, 1, -1, -1), e(1, (1, H), (2, H), (4, H))),
])
g("N4_13", [STD[0], STD[1], STD[2], e(1, (1, -H), (3, H), (4, H))], [
    (diag(1, 1, -1, 1), e(1, (1, -H))),
    (diag(1, 1, -1, -1), e(1, (1, H), (2, H))),
])
g("N4_22", STD, [
    (diag(-1, -1, 1, 1), e(3, (3, H))),
    (diag(-1, -1, -1, 1), e(3, (3, H), (4, H))),
])
g("N4_23", STD, [
    (diag(-1, -1, 1, 1), e(2, (2, -H), (3, H))),
    (diag(-1, -1, -1, 1), e(3, (3, H), (4, H))),
])
g("N4_24", STD, [
    (diag(1, 1, -1, 1), e(2, (2, H))),
    (diag(-1, -1, 1, 1), e(2, (2, H), (4, H))),
])
g("N4_25", STD, [
    (diag(1, 1, -1, 1), e(2, (2, H))),
    (diag(-1, -1, 1, 1), e(2, (2, H), (3, -H), (4, H))),
])
g("N4_26", [STD[0], STD[1], e(1, (1, H), (3, H)), STD[3]], [
    (diag(1, 1, -1, 1), e(2, (2, H))),
    (diag(-1, -1, 1, 1), e(2, (2, H), (4, H))),
])
g("N4_44", STD, [
    (diag(-1, -1, -1, 1), e(2, (2, H), (4, H))),
    (diag(1, 1, -1, -1), e(2, (2, H), (3, -H), (4, -H))),
])

# --- holonomy D3 (hexagonal lattice) ----------------------------------------
A_D3 = block(ID2, rot(4 * sp.pi / 3))
g("O4_18", [STD[0], STD[1], STD[2], -A_D3 * STD[2]], [
    (A_D3, e(2, (2, T3))),
    (block(E0, rot(4 * sp.pi / 3) * E0), e(1, (1, H), (2, T3))),
])
g("O4_19", [STD[0], STD[1], STD[2], -A_D3 * STD[2]], [
    (A_D3, e(1, (1, T3))),
    (block(-E0, rot(4 * sp.pi / 3) * (-E0)), e(1, (1, T3), (2, H))),
])
_v20 = e(2, (2, T3), (3, 2 * T3))
g("O4_20", [STD[0], _v20, A_D3 * A_D3 * _v20, A_D3 * _v20], [
    (A_D3, e(1, (1, T3), (3, H)) - sp.Matrix([0, 0, 0, 1 / (2 * sp.sqrt(3))])),
    (block(-E0, E0),
     e(1, (1, T3), (2, S6), (3, -2 * T3)) - sp.Matrix([0, 0, 0, 1 / sp.sqrt(3)])),
])

# --- holonomy D4 ------------------------------------------------------------
R32 = rot(3 * sp.pi / 2)
g("O4_21", STD, [
    (block(ID2, R32), e(1, (1, Q4))),
    (block(-E0, R32 * (-E0)), e(2, (2, H))),
])
g("O4_22", STD, [
    (block(ID2, R32), e(1, (1, Q4), (3, H))),
    (block(-E0, R32 * (-E0)), e(2, (2, H))),
])
g("O4_23", STD, [
    (block(ID2, R32), e(1, (1, Q4), (2, H), (3, H))),
    (block(-E0, R32 * (-E0)), e(2, (2, H))),
])
g("O4_24", [e(1, (1, -H), (2, -H), (3, H)), e(1, (1, H), (2, -H), (3, -H)),
            e(1, (1, H), (2, H), (3, H)), STD[3]], [
    (block(rot(sp.pi / 2), ID2), e(1, (1, Q4), (2, Q4), (3, Q4), (4, Q4))),
    (block(E0, E0), e(3, (3, H))),
])
g("N4_40", [STD[0], STD[1], e(1, (1, H), (2, H), (3, H), (4, -H)),
            e(1, (1, H), (2, H), (3, H), (4, H))], [
    (block(E0, R32), e(1, (1, Q4), (2, Q4), (3, Q4), (4, -Q4))),
    (block(E0, E0), e(2, (2, H), (3, -H), (4, -H))),
])
SW2 = sp.Matrix([[0, 1], [1, 0]])
g("N4_41", STD, [
    (block(SW2, R32), e(2, (2, H), (3, H))),
    (block(SW2, -E0), e(4, (4, H))),
])
g("N4_47", STD, [
    (block(-E0, R32), e(2, (2, Q4), (4, H))),
    (block(E0, R32 * E0), e(1, (1, H))),
])

# --- holonomy D6 (hexagonal lattice) ----------------------------------------
A_D6 = block(ID2, rot(sp.pi / 3))
g("O4_25", [STD[0], STD[1], STD[2], A_D6 * STD[2]], [
    (A_D6, e(2, (2, S6))),
    (block(E0, E0), e(1, (1, H), (2, -H))),
])

# --- holonomy Z4 x Z2 -------------------------------------------------------
g("N4_27", STD, [
    (block(ID2, rot(sp.pi / 2)), e(2, (2, Q4), (3, -H), (4, -H))),
    (block(-E0, ID2), e(3, (3, H), (4, H))),
])
g("N4_28", STD, [
    (block(ID2, rot(sp.pi / 2)), e(1, (1, -H), (2, Q4), (3, H), (4, H))),
    (block(-E0, ID2), e(1, (1, H), (3, H), (4, H))),
])
g("N4_29", [e(1, (1, -H), (2, -H), (3, H)), e(1, (1, H), (2, -H), (3, -H)),
            e(1, (1, H), (2, H), (3, H)), STD[3]], [
    (block(R32, ID2), e(1, (1, -Q4), (2, -Q4), (3, -Q4), (4, Q4))),
    (block(ID2, -E0), e(2, (2, -H))),
])

# --- holonomy Z6 x Z2 (hexagonal lattice) -----------------------------------
A_Z6 = block(-E0, rot(4 * sp.pi / 3))
g("N4_42", [STD[0], STD[1], STD[2], -A_Z6 * STD[2]], [
    (A_Z6, e(2, (2, S6))),
    (block(ID2, -ID2), e(1, (1, H))),
])

HEXAGONAL = {"O4_18", "O4_19", "O4_20", "O4_25", "N4_42"}


def to_lattice_coordinates(lattice, gens):
    """Conjugate a presentation by (B^-1, 0), B = lattice generators as columns."""
    B = sp.Matrix.hstack(*lattice)
    Binv = B.inv()
    new_lattice = [sp.simplify(Binv * t) for t in lattice]
    new_gens = [(sp.simplify(Binv * A * B), sp.simplify(Binv * v)) for A, v in gens]
    return new_lattice, new_gens


def rat_str(x):
    x = sp.nsimplify(sp.simplify(x), rational=True) if not x.is_Rational else x
    assert x.is_Rational, f"non-rational entry {x}"
    return str(x)


def vec(v):
    return "[" + ", ".join(json.dumps(rat_str(x)) for x in v) + "]"


def emit(outdir):
    outdir.mkdir(parents=True, exist_ok=True)
    names = []
    for name, lattice, gens in GROUPS:
        if name in HEXAGONAL:
            lattice, gens = to_lattice_coordinates(lattice, gens)
        lines = ["{", f' "name": {json.dumps(name)},', ' "dimension": 4,',
                 ' "translations": [']
        lines += [f"  {vec(t)}," if i + 1 < len(lattice) else f"  {vec(t)}"
                  for i, t in enumerate(lattice)]
        lines += [" ],", ' "generators": [']
        for k, (A, v) in enumerate(gens):
            rows = [vec(A.row(i)) for i in range(4)]
            lines.append('  {"matrix": [')
            lines += [f"    {r}," if i < 3 else f"    {r}" for i, r in enumerate(rows)]
            tail = "," if k + 1 < len(gens) else ""
            lines.append(f'   ], "translation": {vec(v)}}}{tail}')
        lines += [" ]", "}"]
        path = outdir / f"{name}.json"
        path.write_text("\n".join(lines) + "\n")
        names.append(name)
    print(f"wrote {len(names)} presentations to {outdir}")


if __name__ == "__main__":
    out = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path("corpus")
    emit(out)
