"""Regenerate the G(2,4) fixture files under src/eqschub/data.

printed:    the six operator matrices of the worked G(2,4) example, transcribed
            entry by entry in Y_i = y_i - y_1.
corrected:  the same operators rebuilt from the closed expressions
            G_13 = D_1 - Y_2, G_14 = D_2 - e_1(Y_2,Y_3) D_1 + e_2(Y_2,Y_3), ...
            with D_h taken from the rank-one Leibniz oracle on the mu basis.
divisorial: the divisor rule on 0/1 strings for every class of G(2,4).

Run:  python scripts/make_fixtures.py
"""

import json
from pathlib import Path

from eqschub.combinatorics import format_index, index_sets, to_bitstring
from eqschub.core import make_context
from eqschub.oracle import mu_leibniz_matrix
from eqschub.polyring import elementary_e, torus_vars
from eqschub.torus import divisorial_rule

N, K = 4, 2
S = torus_vars(N)
y = S.var
Y1, Y2, Y3, Y4 = (y(i) - y(1) for i in range(1, 5))
O, I1 = S.zero(), S.one()
DATA = Path(__file__).resolve().parents[1] / "src" / "eqschub" / "data"

PRINTED = {
    (1, 2): [[I1 if r == c else O for c in range(6)] for r in range(6)],
    (1, 3): [
        [O, O, O, O, O, O],
        [I1, Y3 - Y2, O, O, O, O],
        [O, I1, Y4 - Y2, O, O, O],
        [O, O, O, Y3, O, O],
        [O, O, I1, O, Y4, O],
        [O, O, O, O, I1, Y4 + Y3 - Y2],
    ],
    (1, 4): [
        [O, O, O, O, O, O],
        [O, O, O, O, O, O],
        [I1, Y4 - Y2, (Y4 - Y2) * (Y4 - Y3), O, O, O],
        [O, O, O, O, O, O],
        [O, I1, Y4 - Y3, Y4, Y4 * (Y4 - Y3), O],
        [O, O, I1, O, Y4, Y4 * (Y4 - Y2)],
    ],
    (2, 3): [
        [O, O, O, O, O, O],
        [O, O, O, O, O, O],
        [O, O, O, O, O, O],
        [I1, Y3, O, Y2 * Y3, O, O],
        [O, I1, Y4, Y2, Y2 * Y4, O],
        [O, O, O, I1, Y4, Y3 * Y4],
    ],
    (2, 4): [
        [O, O, O, O, O, O],
        [O, O, O, O, O, O],
        [O, O, O, O, O, O],
        [O, O, O, O, O, O],
        [I1, Y4, Y4 * (Y4 - Y3), Y2 * Y4, Y2 * Y4 * (Y4 - Y3), O],
        [O, I1, Y4, Y4, Y4**2, Y4 * Y3 * (Y4 - Y2)],
    ],
    (3, 4): [
        [O, O, O, O, O, O],
        [O, O, O, O, O, O],
        [O, O, O, O, O, O],
        [O, O, O, O, O, O],
        [O, O, O, O, O, O],
        [I1, Y4 + Y3 - Y2, Y4 * (Y4 - Y2), Y4 * Y3, Y4 * Y3 * (Y4 - Y2),
         Y3 * (Y4 - Y2) * Y4 * (Y3 - Y2)],
    ],
}


def matmul(a, b):
    n = len(a)
    return [[sum((a[i][t] * b[t][j] for t in range(n)), O) for j in range(n)] for i in range(n)]


def lin(*pairs):
    """sum of coeff * matrix over (coeff, matrix) pairs."""
    n = len(pairs[0][1])
    return [[sum((c * m[i][j] for c, m in pairs), O) for j in range(n)] for i in range(n)]


def corrected():
    D = {h: mu_leibniz_matrix(h, N, K) for h in range(3)}
    G = {(1, 2): D[0]}
    G[(1, 3)] = lin((I1, D[1]), (-Y2, D[0]))
    G[(1, 4)] = lin((I1, D[2]), (-elementary_e(1, [Y2, Y3]), D[1]),
                    (elementary_e(2, [Y2, Y3]), D[0]))
    G[(2, 3)] = lin((I1, matmul(D[1], D[1])), (-I1, D[2]))
    G[(2, 4)] = matmul(lin((I1, D[1]), (-Y4, D[0])), G[(1, 4)])
    G[(3, 4)] = lin((I1, matmul(lin((I1, D[2]), (-Y4**2, D[0])), G[(1, 4)])),
                    (-(Y2 + Y4), G[(2, 4)]))
    return G


def dump_ops(ops):
    return {format_index(I): [[str(a) for a in row] for row in m] for I, m in ops.items()}


def main():
    basis = index_sets(K, N)
    header = {"n": N, "k": K, "mode": "torus", "basis": "mu",
              "index": [list(I) for I in basis]}
    fixed = corrected()
    discrepancies = []
    for I in PRINTED:
        for r in range(6):
            for c in range(6):
                a, b = PRINTED[I][r][c], fixed[I][r][c]
                if a != b:
                    discrepancies.append({"operator": list(I), "row": list(basis[r]),
                                          "col": list(basis[c]),
                                          "printed": str(a), "corrected": str(b)})
    DATA.mkdir(parents=True, exist_ok=True)
    (DATA / "g24_printed.json").write_text(json.dumps(
        {**header, "source": "printed", "operators": dump_ops(PRINTED)}, indent=1) + "\n")
    (DATA / "g24_corrected.json").write_text(json.dumps(
        {**header, "source": "leibniz-oracle", "operators": dump_ops(fixed),
         "discrepancies": discrepancies}, indent=1) + "\n")
    ctx = make_context(N, K, "torus")
    rules = {to_bitstring(I, N): {s: str(c) for s, c in divisorial_rule(I, ctx).items()}
             for I in basis}
    (DATA / "g24_divisorial.json").write_text(json.dumps(
        {"n": N, "k": K, "rules": rules}, indent=1) + "\n")
    for d in discrepancies:
        print(d)


if __name__ == "__main__":
    main()
