"""Decompose integrable tensor products on the gl(3|1) head and compare with LR coefficients."""
import argparse
import time

from superduality.cartan import preset
from superduality.chars import tensor_decompose_integrable
from superduality.symfunc import lr_coefficients, partitions_up_to
from superduality.weights import gl_partition_weight, gl_weight_partition, natural_map


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=5, help="bound on |lambda| + |mu|")
    args = parser.parse_args()
    head = preset("gl(3|1)")
    pairs = [(a, b) for a in partitions_up_to(args.size) for b in partitions_up_to(args.size)
             if sum(a) + sum(b) <= args.size]
    for flavor, rank, to_flavor, cutoff in (("g", 2, lambda w: w, 60), ("sg", 0, natural_map, 20)):
        start = time.perf_counter()
        bad = 0
        for a, b in pairs:
            found = tensor_decompose_integrable(head, flavor, rank, to_flavor(gl_partition_weight(a, 3)),
                                                to_flavor(gl_partition_weight(b, 3)), cutoff)
            got = {gl_weight_partition(w, 3, flavor=flavor): c for w, c in found.items()}
            if got != lr_coefficients(a, b):
                bad += 1
                print(f"mismatch {flavor} {a} x {b}: {got}")
        print(f"{flavor} rank {rank}: {len(pairs)} pairs, {bad} mismatches, "
              f"{time.perf_counter() - start:.1f} s")


if __name__ == "__main__":
    main()
