"""Write SVG drawings and exact-coordinate JSON for the Euclidean triangle tilings.

    python scripts/render_tilings.py --radius 6 --out-dir out/tilings
"""

import argparse
from pathlib import Path

from coxref.config import TilingConfig
from coxref.spaces import TriangleModel, tile
from coxref.spaces.tiling import dumps_json, overlapping_pairs, tiling_json, tiling_svg


def render(kind, radius, out_dir, size, check_overlaps):
    model = TriangleModel(kind)
    tiles = tile(model, radius)
    if check_overlaps:
        bad = overlapping_pairs(tiles)
        if bad:
            raise SystemExit(f"{kind}: overlapping chambers {bad[:5]}")
    stem = out_dir / f"tri{kind}_r{radius}"
    stem.with_suffix(".svg").write_text(tiling_svg(model, radius, tiles, size=size))
    stem.with_suffix(".json").write_text(dumps_json(tiling_json(model, radius, tiles)))
    return len(tiles), stem


def main(argv=None):
    cfg = TilingConfig()
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--kinds", nargs="+", default=list(cfg.kinds), choices=("244", "333", "236"))
    ap.add_argument("--radius", type=int, default=cfg.radius)
    ap.add_argument("--out-dir", default=cfg.out_dir)
    ap.add_argument("--size", type=int, default=cfg.size)
    ap.add_argument("--no-overlap-check", action="store_true")
    args = ap.parse_args(argv)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for kind in args.kinds:
        n, stem = render(kind, args.radius, out_dir, args.size, not args.no_overlap_check)
        print(f"tri{kind}: {n} chambers -> {stem}.svg, {stem}.json")


if __name__ == "__main__":
    main()
