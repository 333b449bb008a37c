"""Compare root multiplicities of the even and isotropic tail systems on shared weights.

For each head and rank pair, roots of bounded height are computed in both
systems, rewritten as weights, and compared where both systems have them.
"""
import argparse

from superduality import oracle
from superduality.cartan import preset
from superduality.chars import flavor_system


def roots_as_weights(fs, height):
    sgcm = fs.to_sgcm()
    out = {}
    for beta, value in oracle.root_multiplicities(sgcm, height).items():
        expr = {}
        for i, c in zip(sgcm.indices, beta):
            for k, v in fs.roots[i].items():
                expr[k] = expr.get(k, 0) + c * v
        out[fs.root_weight({k: v for k, v in expr.items() if v})] = value
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--height", type=int, default=6)
    parser.add_argument("--heads", default="gl(2|1),G3,osp(2|4)")
    args = parser.parse_args()
    print("head\tg_rank\tdg_rank\tcommon\tmismatches")
    for name in args.heads.split(","):
        head = preset(name)
        for g_rank, dg_rank in ((2, 1), (4, 2)):
            even = roots_as_weights(flavor_system(head, "g", g_rank), args.height)
            odd = roots_as_weights(flavor_system(head, "dg", dg_rank), args.height)
            common = set(even) & set(odd)
            bad = sum(even[w] != odd[w] for w in common)
            print(f"{name}\t{g_rank}\t{dg_rank}\t{len(common)}\t{bad}")


if __name__ == "__main__":
    main()
