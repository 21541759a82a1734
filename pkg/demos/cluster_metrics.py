#!/usr/bin/env python3
"""Cluster statistics of codes: run structure, average, variance."""

from fibtree import cluster_average, cluster_profile, cluster_variance, value, weight

for code in ("1100", "0101", "1110110"):
    profile = cluster_profile(code)
    print(f"code {code}")
    print(f"  weight          {weight(code)}")
    print(f"  runs            {profile.run_lengths}")
    print(f"  per position    {profile.per_position}")
    print(f"  cluster average {cluster_average(code)}")
    print(f"  cluster variance {cluster_variance(code)}")
    print()

# equal variance does not pin the value, but extremes do line up:
# among length-6 codes the alternating patterns sit at variance 1
# and the constant ones at variance 36
samples = ["010101", "101010", "111111", "000000", "110100"]
for code in samples:
    print(f"  var[{code}] = {str(cluster_variance(code)):>4}   F = {value(code)}")
