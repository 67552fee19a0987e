import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import json
import tempfile

from src.config import EngineSettings, RunConfig, load_config, parse_config, serialize
from src.errors import ConfigError

GR27 = """[variety]
ambient = grassmannian(2,7)
cuts = ["O(1)", "O(1)"]
[bundle]
E = dual(U)+4*O
[output]
hodge = true
label = t.1
"""

RICHARDSON = """# orbit (6) on P^5
[variety]
ambient = projective_space(5)
[bundle]
E = 3*O
twist = O(1)
[locus]
kind = richardson
orbit = 6
"""


class TestRunConfig(unittest.TestCase):
    def test_parse(self):
        cfg = parse_config(GR27)
        self.assertEqual(cfg.ambient, 'grassmannian(2,7)')
        self.assertEqual(cfg.cuts, ['O(1)', 'O(1)'])
        self.assertEqual(cfg.bundle, 'dual(U)+4*O')
        self.assertTrue(cfg.hodge)
        self.assertEqual(cfg.kind, 'forms-y2')
        self.assertEqual(cfg.label, 't.1')

    def test_locus_config(self):
        cfg = parse_config(RICHARDSON)
        self.assertEqual(cfg.orbit, 6)
        locus = cfg.locus_config()
        self.assertEqual(locus.twist, 'O(1)')
        self.assertEqual(locus.orbit, 6)

    def test_single_cut_as_text(self):
        cfg = parse_config(GR27.replace('cuts = ["O(1)", "O(1)"]', 'cuts = O(2)'))
        self.assertEqual(cfg.cuts, ['O(2)'])

    def test_wrong_rank_has_position(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_config(GR27.replace('4*O', '3*O'))
        self.assertEqual(ctx.exception.line, 5)
        self.assertIn('rank 5', str(ctx.exception))
        self.assertTrue(str(ctx.exception).startswith('line 5, column 1'))

    def test_rank_check_can_be_skipped(self):
        cfg = parse_config(GR27.replace('4*O', '3*O'), check_ranks=False)
        self.assertEqual(cfg.bundle, 'dual(U)+3*O')

    def test_bundle_syntax_error_column(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_config(GR27.replace('E = dual(U)+4*O', 'E = dual(U)+4*@'))
        self.assertEqual((ctx.exception.line, ctx.exception.column), (5, 15))

    def test_unknown_key(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_config(GR27.replace('E = ', 'F = '))
        self.assertEqual(ctx.exception.line, 5)

    def test_duplicate_key(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_config(GR27 + "[bundle]\nE = 6*O\n")
        self.assertEqual(ctx.exception.line, 10)
        self.assertIn('line 5', str(ctx.exception))

    def test_unknown_section(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_config("[plot]\n")
        self.assertEqual((ctx.exception.line, ctx.exception.column), (1, 2))

    def test_key_outside_section(self):
        with self.assertRaises(ConfigError):
            parse_config("ambient = projective_space(9)\n")

    def test_bad_json(self):
        with self.assertRaises(ConfigError):
            parse_config(GR27.replace('cuts = ["O(1)", "O(1)"]', 'cuts = ["O(1)"'))

    def test_bad_values(self):
        with self.assertRaises(ConfigError):
            parse_config(RICHARDSON.replace('richardson', 'spinor'))
        with self.assertRaises(ConfigError):
            parse_config(RICHARDSON.replace('orbit = 6', 'orbit = "six"'))
        with self.assertRaises(ConfigError):
            parse_config(GR27.replace('hodge = true', 'hodge = 1'))

    def test_missing_pieces(self):
        with self.assertRaises(ConfigError):
            parse_config("[bundle]\nE = 6*O\n")
        with self.assertRaises(ConfigError):
            parse_config("[variety]\nambient = projective_space(9)\n")
        with self.assertRaises(ConfigError):
            parse_config(RICHARDSON.replace('orbit = 6', ''))
        with self.assertRaises(ConfigError):
            parse_config(RICHARDSON + "partition = [3]\n")

    def test_partition_must_match_rank(self):
        text = RICHARDSON.replace('orbit = 6', 'partition = [2, 1, 1]')
        with self.assertRaises(ConfigError):
            parse_config(text)
        cfg = parse_config(RICHARDSON.replace('orbit = 6', 'partition = (2,1)'))
        self.assertEqual(cfg.partition, (2, 1))

    def test_serialize_round_trip(self):
        for text in (GR27, RICHARDSON):
            cfg = parse_config(text)
            self.assertEqual(parse_config(serialize(cfg)), cfg)

    def test_load_config(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'run.odl')
            with open(path, 'w', encoding='utf-8') as f:
                f.write(RICHARDSON)
            self.assertIsInstance(load_config(path), RunConfig)


class TestEngineSettings(unittest.TestCase):
    def test_defaults(self):
        settings = EngineSettings()
        self.assertEqual(settings.generic_dim, 9)
        self.assertEqual(settings.workers, 1)

    def test_missing_file(self):
        self.assertEqual(EngineSettings.load(None), EngineSettings())

    def test_save_and_load(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'settings.json')
            EngineSettings(workers=4, log_level='INFO').save(path)
            loaded = EngineSettings.load(path)
            self.assertEqual(loaded.workers, 4)
            self.assertEqual(loaded.log_level, 'INFO')

    def test_bad_files(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'settings.json')
            with open(path, 'w', encoding='utf-8') as f:
                f.write('{"workers": 2,')
            with self.assertRaises(ConfigError):
                EngineSettings.load(path)
            with open(path, 'w', encoding='utf-8') as f:
                json.dump({'colour': 'red'}, f)
            with self.assertRaises(ConfigError):
                EngineSettings.load(path)


if __name__ == '__main__':
    unittest.main()
