"""
What the closed form actually models
====================================

The falsification probability 1 - (1 - 2^-b)^(m+1) treats every fold step
as an independent 2^-b collision opportunity.  That holds when each path
element carries fresh entropy -- the default "wide" mode draws 32-byte
siblings, so even though nodes are truncated to b bits, every level's fold
input is new.

In a fully truncated tree the siblings themselves are b-bit values.  At
small b that leaves only 2^b distinct sibling values and 2^b running-node
values: the same (node, sibling) fold input recurs across levels, the hash
is evaluated once and reused, and levels stop being independent.  The
"truncated" sibling mode reproduces that regime.
"""

from merkle_falsify import ExperimentConfig, run_cell

# b=2, m=10, ideal oracle: only 4 distinct sibling values exist, so an
# 11-step path almost surely repeats fold inputs many times over.
for mode in ("wide", "truncated"):
    cell = run_cell(
        ExperimentConfig(
            bits=2,
            path_len=10,
            trials_per_experiment=1000,
            num_experiments=20,
            oracle_kind="ideal",
            sibling_mode=mode,
            master_seed=7,
        )
    )
    print(
        f"b=2  m=10  {mode:9s}: empirical {cell.empirical_p:.4f}"
        f"  closed form {cell.exact_p:.4f}  z = {cell.z_score:+8.1f}"
    )

print()
print("wide matches the closed form; truncated undershoots it badly --")
print("repeated fold inputs cannot produce new collision opportunities.")
print()

# The dependence fades as b grows: at b=8 there are 256 sibling values,
# repeats along an 11-step path are rare, and both modes agree.
for mode in ("wide", "truncated"):
    cell = run_cell(
        ExperimentConfig(
            bits=8,
            path_len=10,
            trials_per_experiment=1000,
            num_experiments=20,
            sibling_mode=mode,
            master_seed=7,
        )
    )
    print(
        f"b=8  m=10  {mode:9s}: empirical {cell.empirical_p:.4f}"
        f"  closed form {cell.exact_p:.4f}  z = {cell.z_score:+8.1f}"
    )
