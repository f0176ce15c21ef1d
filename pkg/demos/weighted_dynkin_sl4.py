#!/usr/bin/env python3
"""Recover the weighted Dynkin diagrams of sl4 by two independent routes.

Nilpotent orbits of sl(n) are Jordan partitions of n.  The classical recipe
interleaves the strings {p-1, p-3, ..., 1-p} of each part p and takes
consecutive differences of the sorted eigenvalue list.  The region method
never looks at eigenvalues: it cuts the dominant chamber with the adjoint
module's level-2 hyperplanes and minimizes the invariant norm over the
regions whose generic Jordan type is related to the orbit.  The two answers
agree on every orbit.
"""

from orbitchar import (
    AdjointSlModel,
    RegionAnalysis,
    characteristic,
    m_sets,
    partitions_of,
    weighted_dynkin_from_partition,
)


def csv(values):
    return ",".join(str(v) for v in values)


n = 4
model = AdjointSlModel(n)
analysis = RegionAnalysis.build(model)

print(f"sl{n} adjoint module: {len(analysis.hyperplanes)} hyperplanes,"
      f" {len(analysis.regions)} regions")
print()

header = f"{'partition':>10} | {'classical':>10} | {'regions':>10} | {'dense':>10} | point"
print(header)
print("-" * len(header))
for part in partitions_of(n):
    classical = weighted_dynkin_from_partition(part)
    ch = characteristic(analysis, part, mode="nonempty")
    dense = characteristic(analysis, part, mode="dense")
    print(
        f"{model.descriptor(part):>10} | {csv(classical):>10} |"
        f" {csv(ch.labels):>10} | {csv(dense.labels):>10} | ({csv(ch.point)})"
    )
    assert tuple(ch.labels) == classical
    assert tuple(dense.labels) == classical
print()

# the minimal orbit (a single 2-block) lies in the closure of every nonzero
# Jordan type, so it meets every region except the one spanning nothing; the
# regular orbit (one block) is met only where the span is generically regular
for part in ((2,) + (1,) * (n - 2), (n,)):
    meets, dense = m_sets(analysis, part)
    print(
        f"orbit {model.descriptor(part)}: meets {len(meets)} of"
        f" {len(analysis.regions)} regions, dense in {len(dense)}"
    )
