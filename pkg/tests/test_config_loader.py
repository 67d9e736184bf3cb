import json
import tempfile
import unittest
from pathlib import Path

from py_app.agent import PolicyMode
from py_app.config_loader import load_config, parse_config
from py_app.errors import ConfigValidationError, ParseError, UnknownKey
from py_app.gridworld import Position, RefugeRect

CONFIG_DIR = Path(__file__).resolve().parents[1] / "config"


class ParseConfigTests(unittest.TestCase):
    def test_minimal_config_uses_defaults(self) -> None:
        config = parse_config('{"width": 20, "height": 20}')
        self.assertEqual(config.world.refuge, RefugeRect(0, 0, 4, 4))
        self.assertEqual(config.world.start, Position(1, 1))
        self.assertEqual(config.agent.fear_initial, 0.9)
        self.assertIs(config.agent.mode, PolicyMode.STOCHASTIC)
        self.assertEqual((config.bin_width, config.max_ticks, config.seed), (100, 200_000, 42))

    def test_whole_numbers_accepted_for_reals(self) -> None:
        config = parse_config('{"width": 5, "height": 5, "refuge": {"w": 1, "h": 1}, "start": [0, 0], "fear_initial": 1, "w_fear": 2}')
        self.assertEqual(config.agent.fear_initial, 1.0)
        self.assertEqual(config.agent.w_fear, 2.0)

    def test_not_json(self) -> None:
        with self.assertRaises(ParseError):
            parse_config("{width: 3")
        with self.assertRaises(ParseError):
            parse_config("[1, 2]")

    def test_unknown_keys(self) -> None:
        with self.assertRaises(UnknownKey) as ctx:
            parse_config('{"width": 5, "height": 5, "fear": 0.2}')
        self.assertEqual(ctx.exception.key, "fear")
        with self.assertRaises(UnknownKey) as ctx:
            parse_config('{"width": 5, "height": 5, "refuge": {"x": 0, "y": 0, "w": 1, "h": 1, "z": 0}}')
        self.assertEqual(ctx.exception.key, "refuge.z")

    def test_type_and_range_errors_name_the_key(self) -> None:
        cases = [
            ('{"width": 5}', "height"),
            ('{"width": "5", "height": 5}', "width"),
            ('{"width": 5, "height": 5, "mode": "sometimes"}', "mode"),
            ('{"width": 5, "height": 5, "bin_width": 0}', "bin_width"),
            ('{"width": 5, "height": 5, "fear_decay": 1.5}', "fear_decay"),
            ('{"width": 5, "height": 5, "start": [4, 4]}', "start"),
            ('{"width": 3, "height": 3, "refuge": {"x": 0, "y": 0, "w": 3, "h": 3}, "start": [0, 0]}', "refuge"),
        ]
        for text, key in cases:
            with self.subTest(key=key):
                with self.assertRaises(ConfigValidationError) as ctx:
                    parse_config(text)
                self.assertEqual(ctx.exception.key, key)


class BundledConfigTests(unittest.TestCase):
    def test_every_bundled_config_loads(self) -> None:
        for path in sorted(CONFIG_DIR.glob("*.json")):
            with self.subTest(config=path.name):
                load_config(path)

    def test_max_fear_preset(self) -> None:
        config = load_config(CONFIG_DIR / "max-fear.json")
        self.assertEqual((config.agent.fear_initial, config.agent.fear_decay), (1.0, 0.0))

    def test_load_from_disk(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "c.json"
            path.write_text(json.dumps({"width": 4, "height": 3, "refuge": {"w": 1, "h": 1}, "start": [0, 0]}), encoding="utf-8")
            config = load_config(path)
        self.assertEqual(config.world.arena_cell_count, 11)

    def test_missing_file(self) -> None:
        with self.assertRaises(FileNotFoundError):
            load_config(Path("/nonexistent/explorer.json"))


if __name__ == "__main__":
    unittest.main()
