"""Transferred characters on the gl(2|1) head against irreducible characters from the oracle."""
import argparse

from superduality import oracle
from superduality.cartan import preset
from superduality.chars import (
    TransferTable, even_side_table, fits_rank, flavor_system, is_typical, superduality_transfer,
    weight_labels,
)
from superduality.weights import Eps, Weight, eps, head_fw, natural_map


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cutoff", type=int, default=4)
    args = parser.parse_args()
    head = preset("gl(2|1)")
    print("rank\tweight\ttypical\tmatches")
    for rank in (0, 1):
        fs = flavor_system(head, "sg", rank)
        sgcm = fs.to_sgcm()
        for mu in [(), (1,), (2,), (1, 1)]:
            for a in range(3):
                for c in range(-2, 3):
                    lam = head_fw("1") * a + eps(0, -2) * c + Weight(
                        {Eps(0, 2 * (j + 1)): p for j, p in enumerate(mu)})
                    image = natural_map(lam)
                    if not fits_rank(image, "sg", rank):
                        continue
                    labels = weight_labels(image, fs)
                    if not is_typical(sgcm, labels):
                        continue
                    ch = superduality_transfer(TransferTable.single(lam), head, rank, args.cutoff, "sg", ["1"])
                    same = ch.terms == oracle.irreducible_character(sgcm, labels, args.cutoff)
                    print(f"{rank}\t{lam}\tyes\t{same}")
    table = even_side_table(head, 3, Weight(), 8, ["1"])
    trivial = superduality_transfer(table, head, 0, 3, "sg", ["1"])
    print(f"trivial weight through the even-side table: {trivial.text()}")


if __name__ == "__main__":
    main()
