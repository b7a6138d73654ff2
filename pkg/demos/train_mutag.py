"""Train on one MUTAG fold and report accuracy; pass --folds-all for the full 10-fold run."""

import argparse
import sys
from pathlib import Path

from lpegn.datasets import make_folds, parse_tu
from lpegn.training import TrainConfig, run_benchmark


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--data", default=str(Path(__file__).resolve().parents[1] / "data"))
    ap.add_argument("--epochs", type=int, default=30)
    ap.add_argument("--folds-all", action="store_true")
    args = ap.parse_args()

    ds = parse_tu(args.data, "MUTAG")
    print(f"{len(ds)} graphs, {ds.n_classes} classes, mean {ds.mean_nodes():.2f} nodes")
    cfg = TrainConfig(epochs=args.epochs)
    folds = make_folds(ds, cfg.seed)
    ids = None if args.folds_all else [0]

    def progress(fold, row):
        if row["epoch"] % 10 == 0:
            print(f"  fold {fold} epoch {row['epoch']:3d} loss {row['train_loss']:.4f} acc {row['train_acc']:.3f}")
            sys.stdout.flush()

    result = run_benchmark(ds, cfg, folds, ids, progress=progress)
    print(f"test accuracy {result.mean:.1f} +- {result.std:.1f} over {len(result.records)} fold(s)")


if __name__ == "__main__":
    main()
