#!/usr/bin/env python3
# Copyright 2026 The wdist Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates src/poly_table.inc.

For every prime power q = p^m <= 2^16 with m >= 2 this emits the first monic
irreducible polynomial of degree m over GF(p), where polynomials are ordered by
the integer sum c_i p^i over their non-leading coefficients.
"""
import sys

from sympy import Poly, isprime, symbols

LIMIT = 1 << 16


def first_irreducible(p, m):
    x = symbols("x")
    for code in range(p ** m):
        coeffs = []
        v = code
        for _ in range(m):
            coeffs.append(v % p)
            v //= p
        if coeffs[0] == 0:
            continue
        poly = Poly([1] + coeffs[::-1], x, modulus=p)
        if poly.is_irreducible:
            return coeffs + [1]
    raise RuntimeError(f"no irreducible polynomial for {p}^{m}")


HEADER = """\
// Copyright 2026 The wdist Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

"""


def main():
    out = sys.stdout
    out.write(HEADER)
    out.write("// Generated by tools/gen_poly_table.py. Do not edit.\n")
    out.write("// {p, m, {c0, c1, ..., cm}}\n")
    for p in range(2, 257):
        if not isprime(p):
            continue
        m = 2
        while p ** m <= LIMIT:
            coeffs = first_irreducible(p, m)
            out.write("{%d, %d, {%s}},\n" % (p, m, ", ".join(map(str, coeffs))))
            m += 1


if __name__ == "__main__":
    main()
