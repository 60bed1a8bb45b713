"""Draw a few HN polygon comparisons as SVG files."""

import argparse
from pathlib import Path

from ffbundles.bundles import direct_sum
from ffbundles.cli import parse_bundle
from ffbundles.polygons import polygon_of
from ffbundles.render import to_ascii, to_svg

FIGURES = {
    # middle term against the split polygon
    "extension_half": ["O(1/2)", "O(1) + O(0)"],
    "canonical_resolution": ["O(0)^3", "O(-1/2) + O(1)"],
    # nonsemistable kernel pushes the polygon up on [0, 1]
    "kernel_lemma": ["O(1) + O(-1)^2", "O(1) + O(0) + O(-2)"],
    "step1_extra_equality": ["O(-1) + O(-2)^2", "O(-1)^2 + O(-3)", "O(-1) + O(-2)^2"],
}


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", type=Path, default=Path("figures"))
    p.add_argument("--ascii", action="store_true", help="also print each figure to the terminal")
    a = p.parse_args()
    a.out.mkdir(parents=True, exist_ok=True)
    for name, texts in FIGURES.items():
        bundles = [parse_bundle(t) for t in texts]
        polys = [polygon_of(V) for V in bundles]
        labels = [str(V) for V in bundles]
        (a.out / f"{name}.svg").write_text(to_svg(polys, labels))
        print(f"wrote {a.out / (name + '.svg')}")
        if a.ascii:
            print(to_ascii(polys, labels))


if __name__ == "__main__":
    main()
