import io
import json
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from tempfile import TemporaryDirectory
from typing import TYPE_CHECKING
from unittest import TestCase

import numpy as np
import pandas as pd

from tetrabridge.api.exceptions import TetraFileFormatError
from tetrabridge.api.stochastic import depolarizing, normal_is_stochastic
from tetrabridge.cli.files import TetraMatrixFile, dumps, load, loads, save
from tetrabridge.cli.main import EXIT_FAILURE, EXIT_INPUT_ERROR, EXIT_OK, main

if TYPE_CHECKING:
    from ..env import load_rng, random_stochastic
else:
    from env import load_rng, random_stochastic


def run(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()

    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))

    return code, out.getvalue(), err.getvalue()


class CliTestCase(TestCase):
    def setUp(self):
        self._directory = TemporaryDirectory()
        self.directory = Path(self._directory.name)

    def tearDown(self):
        self._directory.cleanup()

    def write(self, name: str, kind: str, dim: int, entries) -> str:
        path = self.directory / name
        save(TetraMatrixFile(kind, dim, np.asarray(entries, dtype=np.float64).reshape(-1)), path)
        return str(path)


class FileTests(CliTestCase):
    def test_round_trip(self):
        entries = load_rng(70).random(16)
        file = loads(dumps(TetraMatrixFile("stochastic_matrix", 4, entries)))

        self.assertEqual(file.kind, "stochastic_matrix")
        self.assertTrue(np.array_equal(file.entries, entries))

    def test_complex_round_trip(self):
        superop = load_rng(71).normal(size=(4, 4)) + 1j * load_rng(72).normal(size=(4, 4))
        file = loads(dumps(TetraMatrixFile("channel_report", 4, arrays={"superop": superop})))

        self.assertTrue(np.array_equal(file.arrays["superop"], superop))

    def test_invalid(self):
        for text in (
            "{",
            "[]",
            '{"kind": "matrix", "dim": 4, "entries": []}',
            '{"kind": "prob_vec", "dim": 4, "entries": [1, 0, 0]}',
            '{"kind": "prob_vec", "dim": 3, "entries": [1, 0, 0]}',
            '{"kind": "prob_vec", "dim": 4, "entries": [1, 0, 0, "0"]}',
            '{"kind": "channel_report", "dim": 4}',
        ):
            with self.assertRaises(TetraFileFormatError, msg=text):
                loads(text)

    def test_save_is_deterministic(self):
        path = self.write("q.json", "stochastic_matrix", 4, np.eye(4))
        self.assertEqual(Path(path).read_text(), dumps(load(path)))


class ValidateTests(CliTestCase):
    def test_identity(self):
        code, out, _ = run("validate", self.write("q.json", "stochastic_matrix", 4, np.eye(4)), "--json")
        report = json.loads(out)

        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report["ok"])
        self.assertTrue(np.allclose(report["result"]["lambda"], [1, 1, 1]))
        self.assertIn("tol", report["options"])

    def test_negative_entry(self):
        m = np.eye(4)
        m[0, 1], m[1, 1] = -0.1, 1.1
        code, out, _ = run("validate", self.write("q.json", "stochastic_matrix", 4, m), "--json")
        offending = json.loads(out)["result"]["offending_entry"]

        self.assertEqual(code, EXIT_FAILURE)
        self.assertEqual((offending["row"], offending["column"]), (0, 1))

    def test_prob_vec(self):
        code, out, _ = run("validate", self.write("p.json", "prob_vec", 4, [0.4, 0.3, 0.2, 0.1]), "--json")

        self.assertEqual(code, EXIT_OK)
        self.assertTrue(np.allclose(json.loads(out)["result"]["r"], [0.4, 0.2, 0.0]))

    def test_normal_form_outside(self):
        code, _, _ = run("validate", self.write("l.json", "normal_form", 3, [1, 1, -1]), "--json")
        self.assertEqual(code, EXIT_FAILURE)

    def test_text_report(self):
        code, out, _ = run("validate", self.write("q.json", "stochastic_matrix", 4, np.eye(4)))

        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("TetraReport("))

    def test_input_errors(self):
        broken = self.directory / "broken.json"
        broken.write_text("{", encoding="utf-8")

        self.assertEqual(run("validate", str(broken))[0], EXIT_INPUT_ERROR)
        self.assertEqual(run("validate", str(self.directory / "missing.json"))[0], EXIT_INPUT_ERROR)


class ToChannelTests(CliTestCase):
    def test_depolarizing(self):
        path = self.write("q.json", "stochastic_matrix", 4, depolarizing(0.5).q)
        code, out, _ = run("to-channel", path, "--json")
        result = json.loads(out)["result"]

        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(result["depolarizing"], 0.5)
        self.assertTrue(result["completely_positive"])
        self.assertEqual(len(result["superop"]), 4)

    def test_not_completely_positive(self):
        code, out, _ = run("to-channel", self.write("l.json", "normal_form", 3, [1, 1, -1]), "--json")
        result = json.loads(out)["result"]

        self.assertEqual(code, EXIT_FAILURE)
        self.assertFalse(result["completely_positive"])
        self.assertAlmostEqual(result["min_choi_eigenvalue"], -0.5)

    def test_not_stochastic(self):
        code, out, _ = run("to-channel", self.write("q.json", "stochastic_matrix", 4, np.full(16, 0.3)), "--json")
        result = json.loads(out)["result"]

        self.assertEqual(code, EXIT_FAILURE)
        self.assertFalse(result["trace_preserving"])
        self.assertFalse(result["unital"])
        self.assertNotIn("lambda", result)

    def test_column_stochastic_only(self):
        q = random_stochastic(load_rng(74))
        code, out, _ = run("to-channel", self.write("q.json", "stochastic_matrix", 4, q), "--json")
        result = json.loads(out)["result"]

        self.assertTrue(result["trace_preserving"])
        self.assertNotIn("lambda", result)
        self.assertEqual(code, EXIT_OK if result["completely_positive"] else EXIT_FAILURE)

    def test_sic_qutrit(self):
        q = random_stochastic(load_rng(73), 9)
        code, out, _ = run("to-channel", self.write("q.json", "stochastic_matrix", 9, q), "--basis", "sic", "--json")
        result = json.loads(out)["result"]

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(result["dim"], 3)
        self.assertTrue(result["trace_preserving"])

    def test_out_file_validates(self):
        output = self.directory / "channel.json"
        path = self.write("q.json", "stochastic_matrix", 4, depolarizing(0.3).q)

        self.assertEqual(run("to-channel", path, "--out", str(output))[0], EXIT_OK)
        self.assertEqual(load(output).kind, "channel_report")
        self.assertEqual(run("validate", str(output))[0], EXIT_OK)


class LindbladTests(CliTestCase):
    def test_depolarizing_generator(self):
        path = self.write("h.json", "generator", 3, [-1, -1, -1])
        code, out, _ = run("lindblad", path, "--time", "0.1,1", "--json")
        result = json.loads(out)["result"]

        self.assertEqual(code, EXIT_OK)
        self.assertTrue(result["certified"])
        self.assertEqual([c["time"] for c in result["exp_consistency"]], [0.1, 1.0])

    def test_zero_generator(self):
        code, _, _ = run("lindblad", self.write("h.json", "generator", 4, np.zeros(16)), "--json")
        self.assertEqual(code, EXIT_OK)

    def test_not_classical(self):
        code, out, _ = run("lindblad", self.write("h.json", "generator", 3, [1, 0, 0]), "--json")
        result = json.loads(out)["result"]

        self.assertEqual(code, EXIT_FAILURE)
        self.assertFalse(result["certified"])
        self.assertEqual(result["exp_consistency"], "skipped")

    def test_not_symmetric(self):
        h = np.zeros((4, 4))
        h[0, 1], h[1, 1] = 1, -1

        self.assertEqual(run("lindblad", self.write("h.json", "generator", 4, h))[0], EXIT_FAILURE)


class EvolveTests(CliTestCase):
    def test_depolarizing_step(self):
        q = self.write("q.json", "stochastic_matrix", 4, depolarizing(0.5).q)
        p = self.write("p.json", "prob_vec", 4, [1, 0, 0, 0])
        code, out, err = run("evolve", q, p, "--steps", "1", "--json")
        frame = pd.read_csv(io.StringIO(out))

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(list(frame["step"]), [0, 1])
        self.assertTrue(np.allclose(frame.loc[1, ["p0", "p1", "p2", "p3"]].to_numpy(float), [0.625, 0.125, 0.125, 0.125]))
        self.assertTrue(np.allclose(frame.loc[1, ["r1", "r2", "r3"]].to_numpy(float), [0.5, 0.5, 0.5]))
        self.assertTrue(np.allclose(frame[["r1", "r2", "r3"]].to_numpy(float), frame[["q1", "q2", "q3"]].to_numpy(float)))
        self.assertTrue(json.loads(err)["ok"])

    def test_out_file(self):
        rng = load_rng(74)
        q = self.write("q.json", "stochastic_matrix", 4, random_stochastic(rng))
        p = self.write("p.json", "prob_vec", 4, rng.dirichlet(np.ones(4)))
        output = self.directory / "trajectory.csv"
        code, out, _ = run("evolve", q, p, "--steps", "5", "--out", str(output), "--json")

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(pd.read_csv(output)), 6)
        self.assertTrue(json.loads(out)["ok"])

    def test_negative_steps(self):
        q = self.write("q.json", "stochastic_matrix", 4, np.eye(4))
        p = self.write("p.json", "prob_vec", 4, [1, 0, 0, 0])

        self.assertEqual(run("evolve", q, p, "--steps", "-1")[0], EXIT_INPUT_ERROR)


class RandomTests(CliTestCase):
    def test_deterministic(self):
        first = run("random", "--kind", "lambda", "--count", "3", "--seed", "7")
        second = run("random", "--kind", "lambda", "--count", "3", "--seed", "7")
        lines = first[1].splitlines()

        self.assertEqual(first[0], EXIT_OK)
        self.assertEqual(first[1], second[1])
        self.assertEqual(len(lines), 3)

        for line in lines:
            self.assertTrue(normal_is_stochastic(loads(line).entries))

    def test_out_directory(self):
        code, _, _ = run("random", "--kind", "doubly", "--count", "2", "--seed", "1", "--out", str(self.directory))
        paths = sorted(self.directory.glob("stochastic_matrix_*.json"))

        self.assertEqual(code, EXIT_OK)
        self.assertEqual([path.name for path in paths], ["stochastic_matrix_0000.json", "stochastic_matrix_0001.json"])

        for path in paths:
            self.assertEqual(run("validate", str(path))[0], EXIT_OK)

    def test_generators_are_certified(self):
        run("random", "--kind", "generator", "--count", "3", "--seed", "2", "--out", str(self.directory))

        for path in sorted(self.directory.glob("generator_*.json")):
            self.assertEqual(run("lindblad", str(path), "--time", "0.5")[0], EXIT_OK)
