# Copyright 2026 The Meyerion Authors.
#
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

"""Sign-vector counts for the octagonal arrangement by direction sampling.

The four lines y = 0, y = x, x = 0, y = -x through the origin cut the plane
into 8 open sectors and 8 open half-lines. Every nonempty open cone of a
{+,-,inf} sign vector contains a sector direction; every relatively open cone
of a {+,-,0} sign vector is a sector, a half-line or the origin.
"""

import itertools
import math

FORMS = [(0, 1), (-1, 1), (1, 0), (1, 1)]


def signs_at(x, y, zero_ok):
    out = []
    for a, b in FORMS:
        v = a * x + b * y
        if abs(v) < 1e-12:
            out.append("0" if zero_ok else None)
        else:
            out.append("+" if v > 0 else "-")
    return out


def main():
    sectors = [signs_at(math.cos(math.radians(22.5 + 45 * k)), math.sin(math.radians(22.5 + 45 * k)), False)
               for k in range(8)]
    point_types = set()
    for s in sectors:
        for mask in itertools.product([False, True], repeat=4):
            point_types.add("".join("*" if m else c for c, m in zip(s, mask)))
    print("feasible {+,-,inf} vectors:", len(point_types))

    cut_types = [(), (0,), (1,), (2,), (3,), (0, 2), (1, 3), (0, 1, 2, 3)]
    restricted = [t for t in point_types
                  if tuple(i for i, c in enumerate(t) if c != "*") in cut_types]
    print("with realized domain:", len(restricted))
    print("dom {1}:", sum(1 for t in restricted if t[0] != "*" and t[1:] == "***"))
    print("dom {2,4}:", sum(1 for t in restricted if t[0] == "*" and t[2] == "*" and t[1] != "*" and t[3] != "*"))

    transformation = set()
    for k in range(16):
        ang = math.radians(22.5 * k)
        transformation.add("".join(signs_at(math.cos(ang), math.sin(ang), True)))
    transformation.add("0000")
    print("transformation types:", len(transformation))


if __name__ == "__main__":
    main()
