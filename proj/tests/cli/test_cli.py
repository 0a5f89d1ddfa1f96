"""End-to-end tests of the selfsim command-line tool.

usage: test_cli.py <path-to-selfsim> <schema-dir>
"""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI = None
SCHEMAS = None


def run(*args, check_code=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=600)
    if check_code is not None and proc.returncode != check_code:
        raise AssertionError(f"{args}: exit {proc.returncode}, expected {check_code}\n{proc.stdout}\n{proc.stderr}")
    return proc


def run_json(*args):
    return json.loads(run(*args, "--format", "json").stdout)


def schema(name):
    with open(os.path.join(SCHEMAS, f"{name}.schema.json")) as f:
        return json.load(f)


def equal_words(n, u, v):
    return run_json("eq", "--n", str(n), "--u", u, "--v", v)["equal"]


class Examples(unittest.TestCase):
    def test_word_problem(self):
        self.assertTrue(run_json("wp", "--n", "4", "--word", "a1^3")["trivial"])
        self.assertFalse(run_json("wp", "--n", "4", "--word", "a1*a2^-1")["trivial"])

    def test_order(self):
        self.assertEqual(run_json("order", "--n", "4", "--word", "a1*a2")["order"], 6)
        self.assertIsNone(run_json("order", "--n", "5", "--word", "a1*a3", "--bound", "20")["order"])

    def test_decompose(self):
        out = run_json("decompose", "--n", "4", "--word", "a1*a2")
        self.assertEqual(out["states"], ["a1", "1", "1", "a2"])
        self.assertEqual(out["root_factors"], ["(2 3 4)", "(1 3 4)"])
        self.assertEqual(out["root"], "(1 3)(2 4)")

    def test_hausdorff(self):
        out = run_json("hausdorff", "--n", "6")
        self.assertAlmostEqual(float(out["rows"][0]["closed_form"]), 0.894646494224960, places=12)
        out = run_json("hausdorff", "--n", "3..8", "--levels", "2")
        self.assertEqual([r["n"] for r in out["rows"]], list(range(3, 9)))
        for r in out["rows"]:
            for m in (1, 2):
                self.assertAlmostEqual(float(r[f"empirical_m{m}"]), float(r[f"formula_m{m}"]), places=12)

    def test_precision_digits(self):
        out = run_json("hausdorff", "--n", "4", "--precision-digits", "10")
        self.assertEqual(out["rows"][0]["closed_form"], "0.6954739270")

    def test_invariants(self):
        out = run_json("invariants", "--n", "5", "--word", "[a1,a2]*a3^2")
        self.assertEqual(out["abelianization"], [0, 0, 2, 0, 0])
        self.assertEqual(out["epsilon"], 2)
        self.assertFalse(out["in_commutator"])
        self.assertTrue(out["in_Kn"])
        out = run_json("invariants", "--n", "4", "--word", "a1*a2")
        self.assertEqual(out["chi4"], 0)
        self.assertTrue(out["in_K4"])

    def test_quotients_csv(self):
        text = run("quotients", "--n", "4", "--levels", "3", "--format", "csv").stdout
        rows = list(csv.DictReader(io.StringIO(text)))
        self.assertEqual([r["order"] for r in rows], ["12", "82944", str(12 * 6912**5)])
        self.assertTrue(all(r["matches"] == "true" for r in rows))

    def test_text_is_default(self):
        text = run("wp", "--n", "4", "--word", "a1^3").stdout
        self.assertIn("trivial: true", text)


class Schemas(unittest.TestCase):
    CASES = [
        ("wp", ["wp", "--n", "4", "--word", "a1*a2^-1"]),
        ("eq", ["eq", "--n", "4", "--u", "a1^-1", "--v", "a1^2"]),
        ("order", ["order", "--n", "4", "--word", "a2*a3"]),
        ("order", ["order", "--n", "5", "--word", "a1*a3"]),
        ("decompose", ["decompose", "--n", "6", "--word", "[a1,a4]^a2"]),
        ("portrait", ["portrait", "--n", "4", "--word", "a1*a2", "--depth", "3"]),
        ("invariants", ["invariants", "--n", "4", "--word", "a1*a3"]),
        ("invariants", ["invariants", "--n", "7", "--word", "a1*a3"]),
        ("quotients", ["quotients", "--n", "5", "--levels", "2"]),
        ("hausdorff", ["hausdorff", "--n", "3..5"]),
    ]

    def test_outputs_validate(self):
        for name, args in self.CASES:
            with self.subTest(args=args):
                jsonschema.validate(run_json(*args), schema(name))

    def test_verify_report_validates(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "report.json")
            run("verify", "--n", "3..4", "--report", path, "--contraction-samples", "500")
            with open(path) as f:
                report = json.load(f)
        jsonschema.validate(report, schema("verify-report"))
        ids = [c["claim_id"] for c in report["checks"]]
        self.assertEqual(len(ids), len(set(ids)))
        self.assertIn("k4-structure[n=4]", ids)


class RoundTrip(unittest.TestCase):
    def test_printed_words_reparse(self):
        for n, word in [(4, "[a1^a2, a3]"), (5, "(a1*a4^-1)^2"), (6, "[(a6^-1*a1*a2*a1^-1)^a3, a4*a5^-1*a4^-1*a3]")]:
            out = run_json("decompose", "--n", str(n), "--word", word)
            self.assertTrue(equal_words(n, out["word"], word))
            wp = run_json("wp", "--n", str(n), "--word", word)
            self.assertTrue(equal_words(n, wp["canonical"], word))
            for state in out["states"]:
                canonical = run_json("wp", "--n", str(n), "--word", state)["canonical"]
                self.assertTrue(equal_words(n, canonical, state))

    def test_deterministic(self):
        a = run("quotients", "--n", "4", "--levels", "2", "--format", "json").stdout
        b = run("quotients", "--n", "4", "--levels", "2", "--format", "json").stdout
        self.assertEqual(a, b)


class ExitCodes(unittest.TestCase):
    def test_parse_errors(self):
        run("wp", "--n", "4", "--word", "a9", check_code=2)
        run("wp", "--n", "4", "--word", "a1^", check_code=2)
        run("wp", "--n", "4", check_code=2)
        run("wp", "--n", "two", "--word", "a1", check_code=2)
        run("wp", "--n", "2", "--word", "a1", check_code=2)
        run("frobnicate", check_code=2)
        run("wp", "--n", "4", "--word", "a1", "--format", "xml", check_code=2)
        proc = run("wp", "--n", "4", "--word", "a1^", check_code=2)
        self.assertIn("Usage", proc.stderr)

    def test_budget_refusal(self):
        proc = run("quotients", "--n", "8", "--levels", "4", check_code=3)
        self.assertIn("budget", proc.stderr)
        run("quotients", "--n", "4", "--levels", "3", "--budget-degree", "20", check_code=3)
        run("quotients", "--n", "4", "--levels", "2", "--budget-degree", "20", check_code=0)

    def test_verify_exit_status(self):
        run("verify", "--n", "3..4", "--contraction-samples", "200", check_code=0)
        # Odd n includes the element-order claim, which does not hold.
        proc = run("verify", "--n", "5", "--contraction-samples", "200", "--format", "json", check_code=1)
        report = json.loads(proc.stdout)
        failing = [c["claim_id"] for c in report["checks"] if c["status"] == "fail"]
        self.assertEqual(failing, ["order-bounds[n=5]"])

    def test_empty_range(self):
        report = json.loads(run("verify", "--n", "5..4", "--format", "json").stdout)
        self.assertEqual(report["checks"], [])


class ConfigFile(unittest.TestCase):
    def test_toml_sections(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "selfsim.toml")
            with open(path, "w") as f:
                f.write('[wp]\nn = "5"\nword = "a1^4"\nformat = "json"\n')
            out = json.loads(run("--config", path, "wp").stdout)
        self.assertEqual(out["n"], 5)
        self.assertTrue(out["trivial"])

    def test_flags_override_config(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "selfsim.toml")
            with open(path, "w") as f:
                f.write('[wp]\nn = "5"\nword = "a1^4"\n')
            out = json.loads(run("--config", path, "wp", "--word", "a1", "--format", "json").stdout)
        self.assertFalse(out["trivial"])


if __name__ == "__main__":
    CLI, SCHEMAS = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0], "-v"])
