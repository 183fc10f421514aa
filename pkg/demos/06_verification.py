"""
Running the cross-check suite
=============================

``run_suite`` builds every representation for N = 0..n_max over a mu grid
and records one residual per check. The same suite backs ``schwinger-dunkl
verify`` on the command line.
"""

from collections import Counter

from schwinger_dunkl.verify import run_suite

report = run_suite(6, [(0.3, 0.7), (0.0, 0.0), (-0.4, 1.5)], seed=0, n_random=1)
print("passed:", report.passed, "records:", len(report.records))
# Most records hold a residual. Two groups differ: interbasis also records
# cond(T), and negative controls record the residual that exposed the
# perturbation, so large values there are the expected outcome.
groups = Counter(r.check.split("/")[0] for r in report.records)
for name, count in sorted(groups.items()):
    print(f"{name:18s} {count:5d} checks, largest recorded value {report.worst(name):.1e}")
