"""Activation cells of a whole-graph model versus a 1-hop local model on rings and grids."""

from lpegn.bench import scale_benchmark, scale_slopes


def main():
    for family, sizes in (("ring", (16, 64, 256, 1024)), ("grid", (16, 64, 256, 1024))):
        rows = scale_benchmark(family, sizes, k=1, channels=32, measure_peak=family == "ring")
        print(f"{family}:")
        for r in rows:
            print(f"  n={r.n:5d} global {r.global_cells:>11,d} local {r.local_cells:>9,d} ratio {r.ratio:7.1f}")
        print("  slopes:", {k: round(v, 3) for k, v in scale_slopes(rows).items()})


if __name__ == "__main__":
    main()
