#!/usr/bin/env python3
#
# Copyright 2026 The trignum Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the bundled b-file fixtures under data/oeis.

Terms come from the closed forms of each OEIS entry, computed here with
math.comb and sympy, independently of the C++ generators they are checked
against. Offsets follow the OEIS entries.
"""

import argparse
import pathlib
from math import comb, factorial

from sympy import factorint, mobius, totient

TERMS = 60


def a014963(n):
    f = factorint(n)
    return next(iter(f)) if len(f) == 1 else 1


def a182411():
    rows = []
    n = 0
    while len(rows) < 210:
        for k in range(n + 1):
            rows.append(factorial(2 * n) * factorial(2 * k) //
                        (factorial(n) * factorial(k) * factorial(n + k)))
        n += 1
    return rows[:210]


SEQUENCES = {
    "A005408": (0, lambda n: 2 * n + 1),
    "A000290": (0, lambda n: n * n),
    "A000330": (0, lambda n: n * (n + 1) * (2 * n + 1) // 6),
    "A002415": (0, lambda n: n * n * (n * n - 1) // 12),
    "A005585": (1, lambda n: n * (n + 1) * (n + 2) * (n + 3) * (2 * n + 3) // 120),
    "A014963": (1, a014963),
    "A053139": (1, lambda n: int(totient(n)) - int(mobius(n))),
    "A000108": (0, lambda n: comb(2 * n, n) // (n + 1)),
}


def write(out, seq_id, offset, terms):
    path = out / ("b" + seq_id[1:] + ".txt")
    lines = ["# %s, generated by make_oeis_fixtures.py" % seq_id]
    lines += ["%d %d" % (offset + i, t) for i, t in enumerate(terms)]
    path.write_text("\n".join(lines) + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "oeis"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for seq_id, (offset, fn) in SEQUENCES.items():
        write(out, seq_id, offset, [fn(offset + i) for i in range(TERMS)])
    write(out, "A182411", 0, a182411())


if __name__ == "__main__":
    main()
