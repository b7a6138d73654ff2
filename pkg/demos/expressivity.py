"""A star and a triangle with a pendant: max-pool messages cannot tell them apart, local layers can."""

from lpegn.bench import expressivity_pairs, lpegn_logits, margin, mpnn_logits
from lpegn.graph import khop_subgraph, wl_equivalent


def main():
    star, paw = expressivity_pairs()["star_vs_paw"]
    print("1-WL equivalent:", wl_equivalent(star, paw))
    for name, g in (("star", star), ("paw", paw)):
        subs = [sorted(khop_subgraph(g, u, 1).edges) for u in g.nodes]
        print(f"{name} 1-hop sub-graph edge counts:", [len(s) // 2 for s in subs])
    print("\nseed  mpnn margin  lpegn margin")
    for seed in range(10):
        m = margin(*mpnn_logits([star, paw], seed))
        l = margin(*lpegn_logits([star, paw], seed))
        print(f"{seed:4d}  {m:11.2e}  {l:12.2e}")


if __name__ == "__main__":
    main()
