#!/usr/bin/env python3
"""From Drinfeld polynomial data to the ordered tensor factorization.

A local Weyl module is pinned down by one monic polynomial per Dynkin
node.  Listing all roots by descending real part gives an ordered chain
of fundamental factors whose tensor product realizes the module; its
dimension is the product of the fundamental dimensions.
"""

from fractions import Fraction

from yangian_weyl import (
    DrinfeldTuple,
    GaussianRational as G,
    chain_dim,
    lie_type,
    order_factors,
    weyl_module_dim,
    yangian_fundamental_dim,
)


def show(t, polys):
    pi = DrinfeldTuple.from_dict(t, polys)
    chain = order_factors(pi)
    print(f"\n{t}: polynomials with roots "
          + ", ".join(f"node {n}: {[str(r) for r in roots]}"
                      for n, roots in enumerate(pi.roots, 1) if roots))
    for k, (node, a) in enumerate(chain.factors, 1):
        dim = yangian_fundamental_dim(t, node)
        print(f"  factor {k}: node {node}, parameter {a}  (dim {dim})")
    assert chain_dim(chain) == weyl_module_dim(pi)
    print(f"  total dimension {weyl_module_dim(pi)}")


def main():
    show(lie_type("A", 2), {1: [G(2)], 2: [G(1), G(3)]})
    show(lie_type("B", 3), {2: [G(0)], 3: [G(Fraction(5, 2))]})
    show(lie_type("D", 4), {4: [G(0)], 1: [G(0, 1)]})
    show(lie_type("G2"), {2: [G(5), G(0)]})

    # Ties on the real part break by imaginary part, then node index,
    # so the factorization is reproducible.
    show(lie_type("A", 3), {1: [G(1, 1), G(1, -1)], 3: [G(1)]})


if __name__ == "__main__":
    main()
