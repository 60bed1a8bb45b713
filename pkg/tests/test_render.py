import xml.etree.ElementTree as ET

from ffbundles.cli import parse_bundle as B
from ffbundles.polygons import polygon_of
from ffbundles.render import render, to_ascii, to_svg

SVG = "{http://www.w3.org/2000/svg}"


def test_svg_structure():
    polys = [polygon_of(B("O(1) + O(-1)")), polygon_of(B("O(0)^2"))]
    root = ET.fromstring(to_svg(polys, ["a", "b"]))
    assert root.get("version") == "1.1"
    assert len(root.findall(f"{SVG}g[@class='polygon']")) == 2
    grid = root.find(f"{SVG}g[@id='grid']")
    # x from 0 to 2 and y from 0 to 1: three vertical and two horizontal lines
    assert len(grid) == 5
    labels = [t.text for t in root.iter(f"{SVG}text")]
    assert "(1, 1)" in labels and "(2, 0)" in labels and "a" in labels


def test_svg_is_y_up():
    root = ET.fromstring(to_svg([polygon_of(B("O(1)"))]))
    line = root.find(f"{SVG}g[@class='polygon']/{SVG}polyline")
    (x0, y0), (x1, y1) = [tuple(map(float, p.split(","))) for p in line.get("points").split()]
    assert x1 > x0 and y1 < y0


def test_ascii():
    text = to_ascii([polygon_of(B("O(1/2)"))], ["O(1/2)"])
    assert "*" in text and text.rstrip().endswith("O(1/2)")
    assert render([polygon_of(B("O(0)"))], fmt="ascii") == to_ascii([polygon_of(B("O(0)"))])
