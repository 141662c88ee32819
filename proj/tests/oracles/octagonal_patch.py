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
"""Reference R = 5 patch of the closed octagonal pattern at y = (1/5, 1/7)."""

from fractions import Fraction as Fr

from octagonal import generate, p1, sqdist, sign, val

shift = (Fr(1, 5), Fr(1, 7))
zs = generate(shift, 12, 18)
target = (3.0, 2.0)
center = min(zs, key=lambda z: (val(p1(z)[0]) - target[0]) ** 2 + (val(p1(z)[1]) - target[1]) ** 2)
c = p1(center)
patch = [z for z in zs if sign(sqdist(p1(z), c)[0] - 25, sqdist(p1(z), c)[1]) <= 0]
print("center z:", center, "physical:", c)
print("patch size:", len(patch))
rel = sorted(tuple(a - b for a, b in zip(z, center)) for z in patch)
print("relative lattice offsets:", rel)
