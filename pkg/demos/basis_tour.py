"""Walk through equivariant bases: counts, one small basis, restriction, equivariance."""

import numpy as np

from lpegn.basis import bell, build_basis, build_restricted_basis, nullspace_dimension_oracle, verify_equivariance


def main():
    print("basis sizes Bell(k_in + k_out):")
    for ki in range(3):
        print("  ", [len(build_basis(ki, ko, 5)) for ko in range(3)], "expected", [bell(ki + ko) for ko in range(3)])

    b = build_basis(1, 1, 4)
    print("\norder 1 -> 1 on 4 nodes: identity and mean of the other nodes")
    for e, t in enumerate(b.tensors):
        print(f"element {e} ({b.partitions[e].as_sets()}):\n{np.round(t, 3)}")

    print("\nspan check against the exhaustive null space:")
    for ki, ko, m in [(1, 2, 3), (2, 2, 3), (2, 2, 5)]:
        print(f"  ({ki},{ko}) m={m}: rank {build_basis(ki, ko, m).rank()}, oracle {nullspace_dimension_oracle(ki, ko, m)}")

    r = build_restricted_basis(1, 1, 5, [4])
    print(f"\nfixing node 4 of 5 leaves {len(r)} elements, oracle {nullspace_dimension_oracle(1, 1, 5, fixed=(4,))}")

    rep = verify_equivariance(build_basis(2, 2, 5), trials=50)
    print(f"random permutation check on (2,2) m=5: ok={rep.ok}, max error {rep.max_error:.1e}")


if __name__ == "__main__":
    main()
