import unittest

import numpy as np

from py_app.curves import ExplorationCurve
from py_app.csv_io import read_any_csv, read_csv, read_mean_csv, write_csv, write_mean_csv, write_sweep_summary
from py_app.engine import MeanCurve, SweepRow
from py_app.errors import BadHeader, BadRow, InconsistentBinWidth

HEADER = "bin,t_start,t_end,novel_cells,crossings\n"


class WriteCsvTests(unittest.TestCase):
    def test_layout(self) -> None:
        curve = ExplorationCurve(bin_width=100, novel=(0, 12), crossings=(3, 40))
        self.assertEqual(write_csv(curve), HEADER + "0,0,100,0,3\n1,100,200,12,40\n")

    def test_empty_curve_is_header_only(self) -> None:
        self.assertEqual(write_csv(ExplorationCurve(bin_width=5)), HEADER)

    def test_mean_values_use_six_decimals(self) -> None:
        mean = MeanCurve(bin_width=10, novel=(0.5, 1 / 3), crossings=(1.0, 2.0))
        self.assertEqual(write_mean_csv(mean), HEADER + "0,0,10,0.500000,1.000000\n1,10,20,0.333333,2.000000\n")


class ReadCsvTests(unittest.TestCase):
    def test_round_trips_random_curves(self) -> None:
        rng = np.random.default_rng(17)
        for _ in range(1000):
            bin_width = int(rng.integers(1, 200))
            length = int(rng.integers(0, 30))
            crossings = rng.integers(0, bin_width + 1, size=length)
            novel = (rng.random(length) * (crossings + 1)).astype(int)
            curve = ExplorationCurve(bin_width=bin_width, novel=novel.tolist(), crossings=crossings.tolist())
            expected = curve if length else ExplorationCurve(bin_width=100)
            self.assertEqual(read_csv(write_csv(curve)), expected)

    def test_header_only_uses_default_width(self) -> None:
        self.assertEqual(read_csv(HEADER).bin_width, 100)
        self.assertEqual(read_csv(HEADER, default_bin_width=7).bin_width, 7)

    def test_bad_header(self) -> None:
        with self.assertRaises(BadHeader):
            read_csv("bin,start,end,novel,crossings\n0,0,100,0,0\n")
        with self.assertRaises(BadHeader):
            read_csv("")

    def test_row_errors_carry_row_and_reason(self) -> None:
        cases = [
            ("0,0,100,1\n", "field_count"),
            ("0,0,100,x,3\n", "non_integer"),
            ("0,0,100,-1,3\n", "non_integer"),
            ("1,0,100,0,0\n", "gap"),
            ("0,0,100,5,3\n", "novel_gt_crossings"),
            ("0,0,100,5,101\n", "crossings_gt_width"),
        ]
        for body, reason in cases:
            with self.subTest(reason=reason):
                with self.assertRaises(BadRow) as ctx:
                    read_csv(HEADER + body)
                self.assertEqual((ctx.exception.row, ctx.exception.reason), (1, reason))

    def test_gap_in_later_row(self) -> None:
        with self.assertRaises(BadRow) as ctx:
            read_csv(HEADER + "0,0,10,1,1\n2,20,30,0,0\n")
        self.assertEqual(ctx.exception.row, 2)

    def test_inconsistent_bin_width(self) -> None:
        with self.assertRaises(InconsistentBinWidth):
            read_csv(HEADER + "0,0,10,1,1\n1,10,25,0,0\n")
        with self.assertRaises(InconsistentBinWidth):
            read_csv(HEADER + "0,5,5,0,0\n")

    def test_crlf_line_endings(self) -> None:
        text = write_csv(ExplorationCurve(bin_width=10, novel=(1, 2), crossings=(3, 4))).replace("\n", "\r\n")
        self.assertEqual(read_csv(text).novel, (1, 2))


class MeanCsvTests(unittest.TestCase):
    def test_mean_round_trip_at_written_precision(self) -> None:
        mean = MeanCurve(bin_width=10, novel=(0.25, 3.5, 0.0), crossings=(1.0, 4.75, 0.5))
        parsed = read_mean_csv(write_mean_csv(mean))
        self.assertEqual(parsed.novel, mean.novel)
        self.assertEqual(parsed.crossings, mean.crossings)
        self.assertEqual(parsed.bin_width, 10)

    def test_read_any_detects_format(self) -> None:
        counts = write_csv(ExplorationCurve(bin_width=10, novel=(1, 2), crossings=(3, 4)))
        means = write_mean_csv(MeanCurve(bin_width=10, novel=(1.5, 2.0), crossings=(3.0, 4.0)))
        self.assertIsInstance(read_any_csv(counts), ExplorationCurve)
        self.assertIsInstance(read_any_csv(means), MeanCurve)

    def test_read_any_keeps_structural_errors(self) -> None:
        with self.assertRaises(BadRow) as ctx:
            read_any_csv(HEADER + "0,0,10,5,3\n")
        self.assertEqual(ctx.exception.reason, "novel_gt_crossings")


class SweepSummaryTests(unittest.TestCase):
    def test_blank_t50_when_nothing_explored(self) -> None:
        mean = MeanCurve(bin_width=10, novel=(1.0,), crossings=(1.0,))
        rows = [
            SweepRow(value=0.2, mean=mean, auc=384.0, peak_bin=1, t50=3),
            SweepRow(value=1.0, mean=mean, auc=0.0, peak_bin=0, t50=None),
        ]
        self.assertEqual(
            write_sweep_summary(rows),
            "value,auc,peak_bin,t50\n0.2,384.000000,1,3\n1,0.000000,0,\n",
        )


if __name__ == "__main__":
    unittest.main()
