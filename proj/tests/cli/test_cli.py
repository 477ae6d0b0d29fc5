"""End-to-end tests for the tenspec command line tool.

Usage: test_cli.py path/to/tenspec
"""

import json
import math
import os
import subprocess
import sys
import tempfile
import unittest

BINARY = None


def run(*args, check=None):
    proc = subprocess.run([BINARY, *map(str, args)], capture_output=True, text=True)
    if check is not None and proc.returncode != check:
        raise AssertionError(
            f"tenspec {' '.join(map(str, args))} exited {proc.returncode}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc


def cnum(pair):
    return complex(pair[0], pair[1])


def all_finite(value):
    if isinstance(value, float):
        return math.isfinite(value)
    if isinstance(value, dict):
        return all(all_finite(v) for v in value.values())
    if isinstance(value, list):
        return all(all_finite(v) for v in value)
    return True


class CliTest(unittest.TestCase):
    def setUp(self):
        self._dir = tempfile.TemporaryDirectory()
        self.dir = self._dir.name

    def tearDown(self):
        self._dir.cleanup()

    def path(self, name):
        return os.path.join(self.dir, name)

    def gen(self, name, *args):
        out = self.path(name)
        run("gen", *args, "-o", out, check=0)
        return out

    def diagonal(self):
        return self.gen("diag.json", "diagonal", "--order", 3, "--dim", 2, "--values", "1,2")

    def test_gen_random_entry_count(self):
        path = self.gen("r.json", "random", "--order", 4, "--dim", 3, "--seed", 9)
        with open(path) as f:
            t = json.load(f)
        self.assertEqual(len(t["entries"]), 81)
        self.assertEqual((t["order"], t["dim"]), (4, 3))

    def test_gen_singular_has_witness(self):
        path = self.gen("s.json", "singular", "--order", 3, "--dim", 2, "--seed", 1)
        with open(path) as f:
            t = json.load(f)
        self.assertEqual(len(t["witness"]), 2)
        self.assertLessEqual(t["witness_residual"], 1e-10)

    def test_det_diagonal(self):
        out = json.loads(run("det", self.diagonal(), check=0).stdout)
        self.assertLess(abs(cnum(out["det"]) - 4.0), 1e-8)
        self.assertFalse(out["singular"])

    def test_eigen_diagonal(self):
        out = json.loads(run("eigen", self.diagonal(), check=0).stdout)
        self.assertEqual(out["count"], 3)
        self.assertTrue(all(c["kind"] == "E" for c in out["classes"]))

    def test_charpoly_constant_term(self):
        out = json.loads(run("charpoly", self.diagonal(), check=0).stdout)
        self.assertLess(abs(cnum(out["coeffs"][0]) - 16.0), 1e-6)
        self.assertEqual(out["degree"], 6)

    def test_outputs_are_finite(self):
        src = self.diagonal()
        for cmd in ("det", "charpoly", "eigen"):
            self.assertTrue(all_finite(json.loads(run(cmd, src, check=0).stdout)), cmd)

    def test_verify_random_default_seed(self):
        path = self.gen("r.json", "random", "--order", 3, "--dim", 2, "--seed", 42)
        proc = run("verify", path, check=0)
        report = json.loads(proc.stdout)
        self.assertTrue(report["pass"])
        self.assertEqual(report["eigen"]["count"], 3)

    def test_verify_singular(self):
        path = self.gen("s.json", "singular", "--order", 3, "--dim", 2, "--seed", 1)
        report = json.loads(run("verify", path, check=0).stdout)
        self.assertTrue(report["pass"])
        names = {c["name"]: c for c in report["checks"]}
        self.assertTrue(names["zero_eigenvalue_class"]["pass"])

    def test_verify_symmetric_with_all_checks(self):
        path = self.gen("sym.json", "symmetric", "--order", 4, "--dim", 2, "--seed", 5)
        report = json.loads(run("verify", "--disc", "--orthogonal", path, check=0).stdout)
        self.assertTrue(report["pass"])
        names = {c["name"] for c in report["checks"]}
        self.assertIn("discriminant_factorization", names)
        self.assertIn("orthogonal_invariance", names)

    def test_disc_flag_needs_symmetry(self):
        path = self.gen("r.json", "random", "--order", 3, "--dim", 2, "--seed", 3)
        proc = run("verify", "--disc", path, check=1)
        self.assertIn("symmetric", proc.stderr)
        self.assertEqual(proc.stdout, "")

    def test_disc_check_symmetric(self):
        path = self.gen("sym.json", "symmetric", "--order", 3, "--dim", 2, "--seed", 2)
        out = json.loads(run("disc-check", path, check=0).stdout)
        self.assertTrue(all_finite(out))

    def test_invariants(self):
        path = self.gen("sym.json", "symmetric", "--order", 3, "--dim", 2, "--seed", 4)
        out = json.loads(run("invariants", path, check=0).stdout)
        self.assertEqual(len(out["conventions"]), 3)

    def test_usage_errors(self):
        self.assertEqual(run("gen", "bogus", "--order", 3, "--dim", 2).returncode, 1)
        self.assertEqual(run("det", self.path("missing.json")).returncode, 1)
        self.assertEqual(run("gen", "random", "--order", 1, "--dim", 2).returncode, 1)
        self.assertEqual(run("frobnicate").returncode, 1)
        bad = self.path("bad.json")
        with open(bad, "w") as f:
            f.write('{"order": 3, "dim": 2, "entries": [[1, 0]]}')
        proc = run("det", bad)
        self.assertEqual(proc.returncode, 1)
        self.assertEqual(proc.stdout, "")

    def test_deterministic_output(self):
        path = self.gen("r.json", "random", "--order", 3, "--dim", 3, "--seed", 11)
        for cmd in ("eigen", "charpoly", "det"):
            a = run("--parallel", "off", cmd, path, check=0).stdout
            b = run("--parallel", "off", cmd, path, check=0).stdout
            self.assertEqual(a, b, cmd)
        g1 = run("gen", "random", "--order", 3, "--dim", 2, "--seed", 7, check=0).stdout
        g2 = run("gen", "random", "--order", 3, "--dim", 2, "--seed", 7, check=0).stdout
        self.assertEqual(g1, g2)


if __name__ == "__main__":
    if len(sys.argv) < 2:
        sys.exit("usage: test_cli.py path/to/tenspec")
    BINARY = os.path.abspath(sys.argv.pop(1))
    unittest.main(verbosity=2)
