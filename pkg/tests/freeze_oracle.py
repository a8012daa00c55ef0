"""Regenerate tests/data/oracle_frozen.json from the finite-field oracle.

Run by hand (python3 tests/freeze_oracle.py); the tests only read the file.
"""

import json
from pathlib import Path

from thetahecke.oracle.convolution import OrbitFunction, convolve
from thetahecke.oracle.groups import coset_count
from thetahecke.oracle.jacquet import lhs
from thetahecke.oracle.orbits import enumerate_orbits
from thetahecke.weyl import OrbitIndex, WeylElem, rotation, simple, translation, w0_index

OUT = Path(__file__).parent / "data" / "oracle_frozen.json"

CENSUS = [(1, 1, 1, 1, 2), (1, 1, 1, 1, 3), (1, 2, 0, 1, 2), (1, 2, 0, 2, 2),
          (1, 3, 0, 1, 2), (2, 2, 0, 1, 2), (2, 2, 0, 1, 3), (2, 3, 0, 1, 2)]

COSETS = [(simple(2, 0), 2, 3, 2), (simple(2, 1), 2, 2, 3), (simple(2, 0), 2, 3, 3),
          (translation((1, 0)), 2, 3, 2), (translation((1, -1)), 2, 4, 2),
          (simple(3, 0) * simple(3, 1), 3, 3, 2), (rotation(3, 1), 3, 2, 2)]

CONVOLUTIONS = [
    ("G", translation((1,)), OrbitIndex([0], [(1, 1)]), 1, 2),
    ("G", translation((2,)), OrbitIndex([0], [(1, 1)]), 1, 3),
    ("H", simple(2, 1), OrbitIndex([0], [(1, 1)]), 2, 2),
    ("H", simple(2, 1), OrbitIndex([0], [(2, 1)]), 2, 2),
    ("H", simple(2, 0), OrbitIndex([0], [(1, 1)]), 2, 2),
    ("H", rotation(2, 1), OrbitIndex([0], [(2, 1)]), 2, 3),
    ("G", simple(2, 1), w0_index(2), 2, 2),
    ("G", simple(2, 0), w0_index(2), 2, 2),
    ("H", simple(3, 2), OrbitIndex([0, 0], [(1, 2), (2, 1)]), 3, 2),
]


def census_entry(n, m, N, r, q):
    c = enumerate_orbits(n, m, N, r, q)
    sizes = [[o.index.to_json(), o.size] for o in sorted(c.matched(), key=lambda o: o.index)]
    return {"key": [n, m, N, r, q], "sizes": sizes,
            "leftover": sorted(o.size for o in c.leftover())}


def main():
    data = {
        "census": [census_entry(*k) for k in CENSUS],
        "coset_count": [{"w": w.to_json(), "d": d, "q": q, "count": coset_count(w, k, d, q)}
                        for w, k, d, q in COSETS],
        "convolve": [],
        "jacquet_lhs": [],
    }
    for side, w, idx, m, q in CONVOLUTIONS:
        f = convolve(side, w, OrbitFunction.indicator(idx, m, q))
        data["convolve"].append({"side": side, "w": w.to_json(), "mu": idx.to_json(), "m": m, "q": q,
                                 "values": [[k.to_json(), v] for k, v in sorted(f.values.items())]})
    for lam in [(0, 0), (1, 0), (1, 1), (2, 0)]:
        for q in (2, 3):
            vals = lhs(lam, q)
            data["jacquet_lhs"].append({"lam": list(lam), "q": q,
                                        "values": {str(a): v for a, v in vals.items()}})
    OUT.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
