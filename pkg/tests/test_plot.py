import unittest
import xml.etree.ElementTree as ET

from py_app.errors import NoData
from py_app.plot import render_plot

SVG_NS = "{http://www.w3.org/2000/svg}"


class RenderPlotTests(unittest.TestCase):
    def test_one_polyline_per_series(self) -> None:
        svg = render_plot([("low", [0, 3, 5, 2, 0]), ("high", [0, 1, 2, 4, 1])], title="fear")
        root = ET.fromstring(svg)
        polylines = root.findall(f".//{SVG_NS}polyline")
        self.assertEqual(len(polylines), 2)
        self.assertEqual(len(polylines[0].get("points").split()), 5)
        texts = [t.text for t in root.iter(f"{SVG_NS}text")]
        self.assertIn("low", texts)
        self.assertIn("high", texts)
        self.assertIn("fear", texts)

    def test_output_is_byte_stable(self) -> None:
        series = [("a", [0.5, 1.25, 0.75]), ("b", [1, 0, 2, 0])]
        self.assertEqual(render_plot(series), render_plot(series))

    def test_labels_are_escaped(self) -> None:
        svg = render_plot([("<fear & friends>", [1, 2])])
        self.assertIn("&lt;fear &amp; friends&gt;", svg)
        ET.fromstring(svg)

    def test_bin_width_scales_tick_labels(self) -> None:
        svg = render_plot([("a", [0, 1, 2, 3, 4])], bin_width=100)
        texts = [t.text for t in ET.fromstring(svg).iter(f"{SVG_NS}text")]
        self.assertIn("400", texts)

    def test_empty_series_are_skipped(self) -> None:
        svg = render_plot([("empty", []), ("full", [1, 2, 1])])
        self.assertEqual(svg.count("<polyline"), 1)

    def test_no_data(self) -> None:
        with self.assertRaises(NoData):
            render_plot([])
        with self.assertRaises(NoData):
            render_plot([("empty", [])])

    def test_flat_zero_series(self) -> None:
        svg = render_plot([("zeros", [0, 0, 0])])
        ET.fromstring(svg)


if __name__ == "__main__":
    unittest.main()
