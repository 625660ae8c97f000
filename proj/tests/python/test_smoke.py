"""Smoke tests for the python bindings and the CLI."""

import json
import os
import subprocess
import sys
import unittest

import symdet


class BindingSmoke(unittest.TestCase):
    def test_build_worked_example(self):
        p = symdet.parse("z1 + z2*z3", "q")
        self.assertFalse(p.is_affine_linear())
        self.assertEqual(p.variables, ["z1", "z2", "z3"])

        report = symdet.build(p)
        self.assertEqual(report.size_trace, [1, 4])
        self.assertEqual(report.strategy_trace, ["Invertible"])
        pencil = report.pencil
        self.assertEqual(pencil.size, 4)
        self.assertEqual(
            pencil.a0,
            [
                ["0", "0", "0", "0"],
                ["0", "-1", "0", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "0", "-1"],
            ],
        )
        self.assertEqual(pencil.coefficient("z2")[0], ["0", "1/2", "1/2", "0"])

        verdict = symdet.verify_symbolic(pencil, p)
        self.assertTrue(verdict["pass"])

    def test_evaluate_and_sampled_verify(self):
        p = symdet.parse("x^2*y - 3", "q")
        self.assertEqual(p.evaluate({"x": 2, "y": 5}), "17")
        report = symdet.build(p)
        verdict = symdet.verify_sampled(report.pencil, p, count=30, seed=7)
        self.assertTrue(verdict["pass"])
        self.assertEqual(verdict["samples"], 30)

    def test_prime_field_roundtrip(self):
        p = symdet.parse("x*y + 2", "fp:5")
        report = symdet.build(p)
        verdict = symdet.verify_exhaustive(report.pencil, p)
        self.assertTrue(verdict["pass"])
        self.assertEqual(verdict["samples"], 25)

    def test_characteristic_two_raises(self):
        with self.assertRaises(symdet.SymdetError) as ctx:
            symdet.parse("x*y + z", "fp:2")
        self.assertIn("characteristic 2", str(ctx.exception))

    def test_decompose_replay(self):
        p = symdet.parse("x^3 + x*y", "q")
        script = symdet.decompose(p)
        self.assertTrue(script.seed.is_affine_linear())
        self.assertEqual(script.replay(), p)

    def test_json_round_trip(self):
        p = symdet.parse("x*y - 1", "q")
        pencil = symdet.build(p).pencil
        again = symdet.Pencil.from_json(pencil.to_json())
        self.assertEqual(again.to_json(), pencil.to_json())


class CliSmoke(unittest.TestCase):
    def setUp(self):
        self.cli = os.environ.get("SYMDET_CLI")
        if not self.cli:
            self.skipTest("SYMDET_CLI not set")

    def run_cli(self, *args, stdin=None):
        return subprocess.run(
            [self.cli, *args], capture_output=True, text=True, input=stdin
        )

    def test_build_verify_exit_codes(self):
        good = self.run_cli("build", "z1 + z2*z3", "--field", "q", "--verify", "symbolic")
        self.assertEqual(good.returncode, 0)
        out = json.loads(good.stdout)
        self.assertTrue(out["verify"]["pass"])

        usage = self.run_cli("build", "z1 +", "--field", "q")
        self.assertEqual(usage.returncode, 1)
        self.assertIn("error", json.loads(usage.stdout))

    def test_verify_subcommand_pipes(self):
        built = self.run_cli("build", "x*y + 1", "--field", "q")
        self.assertEqual(built.returncode, 0)
        checked = self.run_cli(
            "verify", "x*y + 1", "--pencil", "-", "--mode", "symbolic", stdin=built.stdout
        )
        self.assertEqual(checked.returncode, 0)
        self.assertTrue(json.loads(checked.stdout)["pass"])

        wrong = self.run_cli(
            "verify", "x*y + 2", "--pencil", "-", "--mode", "symbolic", stdin=built.stdout
        )
        self.assertEqual(wrong.returncode, 2)

    def test_decompose_round_trip(self):
        res = self.run_cli("decompose", "x^2*y + y", "--field", "q")
        self.assertEqual(res.returncode, 0)
        script = symdet.Script.from_json(res.stdout)
        self.assertEqual(script.replay(), symdet.parse("x^2*y + y", "q"))

    def test_output_is_byte_stable(self):
        a = self.run_cli("build", "x*y - 2", "--field", "q", "--verify", "sampled:20")
        b = self.run_cli("build", "x*y - 2", "--field", "q", "--verify", "sampled:20")
        self.assertEqual(a.stdout, b.stdout)

    def test_characteristic_two_exit(self):
        res = self.run_cli("build", "x*y + z", "--field", "fp:2")
        self.assertEqual(res.returncode, 1)
        self.assertIn("x*y + z", json.loads(res.stdout)["error"])


if __name__ == "__main__":
    sys.exit(unittest.main(verbosity=2))
