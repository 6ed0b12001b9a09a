"""End-to-end checks of the efountain command-line tool.

Usage: cli_test.py <efountain binary> <test data dir>
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

BIN = None
DATA = None


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300)


class Analyze(unittest.TestCase):
    def analyze(self, *args):
        res = run("analyze", *args)
        return res, json.loads(res.stdout) if res.stdout else None

    def test_of3(self):
        res, rep = self.analyze("--family", "of:3")
        self.assertEqual(res.returncode, 0, res.stderr)
        self.assertEqual(rep["schema"], "efountain.analysis/1")
        self.assertEqual(rep["input"]["size"], 6)
        self.assertEqual(rep["conditions"]["gra"]["status"], "true")
        self.assertEqual(rep["conditions"]["gla"]["status"], "true")
        self.assertEqual(rep["conditions"]["phi_iso"]["status"], "true")
        self.assertEqual(rep["algebra"]["semisimple"]["status"], "true")
        self.assertEqual(rep["category"]["objects"], 4)
        self.assertEqual(rep["category"]["d_isomorphic_to_opposite"]["status"], "true")
        self.assertTrue(rep["all_conditions_hold"])
        self.assertNotIn("timing", rep)

    def test_catalan4(self):
        res, rep = self.analyze("--family", "catalan:4", "--timing")
        self.assertEqual(res.returncode, 0, res.stderr)
        self.assertEqual(rep["algebra"]["semisimple"]["status"], "false")
        self.assertEqual(rep["conditions"]["gra"]["status"], "true")
        self.assertIn("timing", rep)

    def test_deterministic(self):
        a = run("analyze", "--family", "io:2").stdout
        b = run("analyze", "--family", "io:2", "--jobs", "4").stdout
        self.assertEqual(a, b)

    def test_null2_table(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "null2.tbl")
            with open(path, "w") as f:
                f.write("2\n0 0\n0 0\n")
            res, rep = self.analyze("--table", path, "--E", "0")
            self.assertIn(res.returncode, (0, 1), res.stderr)
            self.assertEqual(rep["input"]["table"], "null2.tbl")
            self.assertEqual(rep["conditions"]["fountain"]["status"], "false")
            self.assertEqual(rep["conditions"]["congruence"]["status"], "skipped")
            self.assertEqual(res.returncode, 1)

    def test_gra_failure_exits_1(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "s.tbl")
            with open(path, "w") as f:
                f.write("3\n0 0 0\n0 1 2\n2 2 2\n")
            res, rep = self.analyze("--table", path, "--E", "1,2")
            self.assertEqual(res.returncode, 1, res.stderr)
            gra = rep["conditions"]["gra"]
            self.assertEqual(gra["status"], "false")
            self.assertIn("witness", gra)
            self.assertEqual(rep["conditions"]["phi_hom"]["status"], "false")

    def test_e_file(self):
        with tempfile.TemporaryDirectory() as d:
            tbl = os.path.join(d, "s.tbl")
            with open(tbl, "w") as f:
                f.write("3\n0 0 0\n0 1 2\n2 2 2\n")
            efile = os.path.join(d, "e.txt")
            with open(efile, "w") as f:
                f.write("# E\n1\n2\n")
            res, rep = self.analyze("--table", tbl, "--E", efile)
            self.assertEqual(rep["input"]["E"]["elements"], [1, 2])

    def test_input_errors(self):
        with tempfile.TemporaryDirectory() as d:
            tbl = os.path.join(d, "s.tbl")
            with open(tbl, "w") as f:
                f.write("2\n0 0\n0 0\n")
            self.assertEqual(run("analyze", "--table", tbl, "--E", "auto-of").returncode, 2)
            self.assertEqual(run("analyze", "--table", tbl, "--E", "5").returncode, 2)
            bad = os.path.join(d, "bad.tbl")
            with open(bad, "w") as f:
                f.write("2\n1 0\n0 0\n")
            self.assertEqual(run("analyze", "--table", bad).returncode, 2)
        self.assertEqual(run("analyze", "--family", "of").returncode, 2)
        self.assertEqual(run("analyze").returncode, 2)
        self.assertEqual(run("analyze", "--family", "of:3", "--table", "x").returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("analyze", "--table", "/nonexistent").returncode, 2)


class Export(unittest.TestCase):
    def test_dot_category(self):
        res = run("export", "--family", "of:3", "--what", "dot-category")
        self.assertEqual(res.returncode, 0, res.stderr)
        nodes = [l for l in res.stdout.splitlines() if "[label=" in l and "->" not in l]
        self.assertEqual(len(nodes), 4)
        self.assertEqual(res.stdout.count("->"), 6)

    def test_eggbox(self):
        res = run("export", "--family", "of:3", "--what", "dot-eggbox")
        self.assertEqual(res.returncode, 0, res.stderr)
        self.assertEqual(res.stdout.count("subgraph cluster_j"), 3)

    def test_table_round_trip(self):
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "io2.tbl")
            res = run("export", "--family", "io:2", "--what", "table", "--out", out)
            self.assertEqual(res.returncode, 0, res.stderr)
            with open(out) as f:
                lines = f.read().splitlines()
            self.assertEqual(lines[0], "6")
            res = run("analyze", "--table", out)
            rep = json.loads(res.stdout)
            self.assertEqual(rep["input"]["size"], 6)
            self.assertEqual(rep["conditions"]["gra"]["status"], "true")

    def test_phi_matrix(self):
        res = run("export", "--family", "of:4", "--what", "phi-matrix")
        self.assertEqual(res.returncode, 0, res.stderr)
        m = json.loads(res.stdout)
        self.assertEqual(m["schema"], "efountain.linear-map/1")
        self.assertEqual((m["rows"], m["cols"]), (20, 20))
        self.assertEqual(len(m["entries"]), 20)
        self.assertTrue(all(x in ("0", "1") for row in m["entries"] for x in row))

    def test_unknown_what(self):
        self.assertEqual(run("export", "--family", "of:3", "--what", "png").returncode, 2)


class Verify(unittest.TestCase):
    def test_single_criterion(self):
        res = run("verify", "--only", "of-count")
        self.assertEqual(res.returncode, 0, res.stderr)
        self.assertTrue(res.stdout.startswith("PASS 1 of-count"))
        self.assertEqual(len(res.stdout.splitlines()), 1)

    def test_corpus_suite(self):
        res = run("verify", "--suite", "corpus", "--max-order", "5",
                  "--corpus", os.path.join(DATA, "corpus.txt"), "--timing")
        self.assertEqual(res.returncode, 0, res.stdout + res.stderr)
        self.assertTrue(res.stdout.startswith("PASS 3 theorem-sweep"))

    def test_errors(self):
        self.assertEqual(run("verify", "--suite", "nope").returncode, 2)
        self.assertEqual(run("verify", "--only", "nope").returncode, 2)


if __name__ == "__main__":
    BIN, DATA = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
