import io
import os
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import replace
from unittest import TestCase
from unittest.mock import patch

from config import settings

from apps.cli.fixtures import WORKED_EXAMPLES
from apps.cli.models import JobConfig
from apps.cli.parser import _job_config, build_parser, main
from apps.cli.services import (
    cmd_enumerate,
    cmd_paper_examples,
    cmd_straighten,
    cmd_verify,
)
from apps.core.domains import QQ, PrimeFieldDomain
from apps.core.exceptions import ConfigError
from apps.on_straighten.models import Mode


def run_main(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def corrupted_examples():
    """Troca o sinal da primeira linha do exemplo OS2."""
    examples = []
    for example in WORKED_EXAMPLES:
        if example.name == "os2":
            first = example.expected[0].replace("-1", "1", 1)
            example = replace(example, expected=(first,) + example.expected[1:])
        examples.append(example)
    return tuple(examples)


class JobConfigTestCase(TestCase):
    """Testes de validação do JobConfig."""

    def test_defaults_from_settings(self):
        """Testa valores padrão lidos de settings."""
        config = JobConfig(n=4)
        self.assertEqual(config.mode, Mode.ON)
        self.assertEqual(config.seed, settings.ORACLE_SEED)
        self.assertEqual(config.max_terms, settings.STRAIGHTEN_MAX_TERMS)
        self.assertEqual(config.points, 0)

    def test_mode_text(self):
        """Testa modo informado como texto."""
        self.assertEqual(JobConfig(n=4, mode="GO").mode, Mode.GO)

    def test_mode_member(self):
        """Testa modo informado como membro de Mode."""
        for mode in (Mode.ON, Mode.GO, Mode.GL):
            self.assertIs(JobConfig(n=4, mode=mode).mode, mode)

    def test_domain(self):
        """Testa domínio construído a partir de coeff."""
        self.assertEqual(JobConfig(n=4, coeff="q").domain, QQ)
        self.assertEqual(JobConfig(n=4, coeff="f5").domain, PrimeFieldDomain(5))

    def test_invalid_values(self):
        """Testa ConfigError para valores inválidos."""
        for options in (
            {"n": 2},
            {"n": 0, "mode": "gl"},
            {"n": 4, "mode": "sp"},
            {"n": 4, "coeff": "f4"},
            {"n": 4, "coeff": "f2"},
            {"n": 4, "coeff": "r"},
            {"n": 4, "points": -1},
            {"n": 4, "max_terms": 0},
        ):
            with self.assertRaises(ConfigError, msg=options):
                JobConfig(**options)

    def test_gl_small_n(self):
        """Testa que o modo GL aceita n < 3."""
        self.assertEqual(JobConfig(n=2, mode="gl").n, 2)


class EnumerateCommandTestCase(TestCase):
    """Testes do comando enumerate."""

    def test_single_box(self):
        """Testa forma (1) com n=4: as quatro letras."""
        result = cmd_enumerate(JobConfig(n=4), "1")
        self.assertEqual(result.output.splitlines(), ["1b", "1", "2b", "2", "count=4"])

    def test_column_condition_note(self):
        """Testa nota e contagem zero quando λ′₁+λ′₂ > n."""
        result = cmd_enumerate(JobConfig(n=3), "1,1,1,1")
        self.assertEqual(
            result.output.splitlines(),
            ["note: column condition λ′₁+λ′₂ ≤ n violated", "count=0"],
        )

    def test_gl_mode(self):
        """Testa enumeração GL: forma (1,1) com n=2 tem um quadro."""
        result = cmd_enumerate(JobConfig(n=2, mode="gl"), "1,1")
        self.assertEqual(result.output.splitlines(), ["1b; 1", "count=1"])


class StraightenCommandTestCase(TestCase):
    """Testes do comando straighten."""

    def test_standard_input(self):
        """Testa entrada padrão → uma linha com coeficiente 1."""
        result = cmd_straighten(JobConfig(n=4), "1b 1b; 2b", "1b 2; 2b")
        self.assertEqual(result.output, "1\t0\t1b 1b; 2b\t1b 2; 2b")
        self.assertTrue(result.ok)

    def test_verified_on_points(self):
        """Testa verificação em pontos do exemplo OS1."""
        config = JobConfig(n=6, points=4)
        result = cmd_straighten(config, "1b 2b; 2b 2; 2", "1 2; 2b 3; 3b")
        self.assertTrue(result.ok)
        self.assertTrue(result.output)

    def test_gl_symbolic_check(self):
        """Testa modo GL com verificação simbólica."""
        config = JobConfig(n=3, mode="gl", points=1)
        result = cmd_straighten(config, "1 1b", "1b 1")
        for line in result.output.splitlines():
            self.assertEqual(len(line.split("\t")), 4)

    def test_trace_callback(self):
        """Testa que o callback de trace recebe passos."""
        steps = []
        cmd_straighten(
            JobConfig(n=6), "1b 2b; 2b 2; 2", "1 2; 2b 3; 3b", trace=steps.append
        )
        self.assertEqual(steps[0].kind, "RELSUM")


class VerifyCommandTestCase(TestCase):
    """Testes do comando verify."""

    def test_small_basis(self):
        """Testa base O(3) de grau ≤ 1 (10 elementos)."""
        result = cmd_verify(JobConfig(n=3), 1)
        lines = result.output.splitlines()
        self.assertEqual(lines[0], "basis n=3 mode=on coeff=q degrees=0..1 count=10")
        self.assertEqual(lines[-1], "PASS")
        self.assertTrue(result.ok)

    def test_gl_mode_rejected(self):
        """Testa ConfigError no modo GL."""
        with self.assertRaises(ConfigError):
            cmd_verify(JobConfig(n=3, mode="gl"), 1)


class WorkedExamplesCommandTestCase(TestCase):
    """Testes do comando paper-examples."""

    def test_all_pass(self):
        """Testa os quatro exemplos embutidos."""
        result = cmd_paper_examples(JobConfig(n=6))
        self.assertTrue(result.ok)
        self.assertEqual(
            result.output.splitlines(),
            ["mead-two-column: PASS", "os1: PASS", "os2: PASS", "os3: PASS"],
        )

    def test_all_pass_with_points(self):
        """Testa os exemplos com verificação em pontos."""
        result = cmd_paper_examples(JobConfig(n=6, points=3))
        self.assertTrue(result.ok)

    def test_prime_field(self):
        """Testa os exemplos sobre 𝔽₅ (½ = 3)."""
        result = cmd_paper_examples(JobConfig(n=6, coeff="f5"))
        self.assertTrue(result.ok, result.output)

    def test_corrupted_fixture(self):
        """Testa FAIL com diff quando o certificado esperado está errado."""
        result = cmd_paper_examples(JobConfig(n=6), fixtures=corrupted_examples())
        lines = result.output.splitlines()

        self.assertFalse(result.ok)
        self.assertIn("os2: FAIL", lines)
        self.assertTrue(any(line.startswith("  - 1\t") for line in lines))
        self.assertTrue(any(line.startswith("  + -1\t") for line in lines))


class MainTestCase(TestCase):
    """Testes do ponto de entrada e dos códigos de saída."""

    def test_enumerate_to_file(self):
        """Testa saída 0 e escrita em --out."""
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "out.txt")
            code, _, _ = run_main(
                ["enumerate", "--n", "4", "--shape", "1", "--out", path]
            )
            with open(path, encoding="utf-8") as handle:
                content = handle.read()

        self.assertEqual(code, 0)
        self.assertTrue(content.endswith("count=4\n"))

    def test_stdout(self):
        """Testa saída padrão do straighten."""
        code, out, _ = run_main(
            ["straighten", "--n", "4", "--left", "1b 1b; 2b", "--right", "1b 2; 2b"]
        )
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "1\t0\t1b 1b; 2b\t1b 2; 2b")

    def test_explicit_modes(self):
        """Testa --mode on e --mode go com saída 0."""
        for mode in ("on", "go"):
            code, out, _ = run_main([
                "straighten", "--n", "4", "--mode", mode,
                "--left", "1b 1b; 2b", "--right", "1b 2; 2b",
            ])
            self.assertEqual(code, 0, mode)
            self.assertEqual(out.strip(), "1\t0\t1b 1b; 2b\t1b 2; 2b")

    def test_bare_points_flag(self):
        """Testa --points sem valor usando ORACLE_POINTS."""
        args = build_parser().parse_args(["straighten", "--n", "6", "--points"])
        self.assertEqual(_job_config(args).points, settings.ORACLE_POINTS)

        code, _, _ = run_main([
            "straighten", "--n", "6", "--points",
            "--left", "1b 2b; 2b 2; 2", "--right", "1 2; 2b 3; 3b",
        ])
        self.assertEqual(code, 0)

    def test_points_value(self):
        """Testa --points com valor explícito e ausência de --points."""
        parser = build_parser()
        base = ["verify", "--n", "3", "--degree", "1"]
        explicit = _job_config(parser.parse_args(base + ["--points", "3"]))
        self.assertEqual(explicit.points, 3)
        self.assertEqual(_job_config(parser.parse_args(base)).points, 0)

    def test_file_input(self):
        """Testa leitura de S e T de arquivo."""
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "pair.txt")
            with open(path, "w", encoding="utf-8") as handle:
                handle.write("1b 1b; 2b\n1b 2; 2b\n")
            code, out, _ = run_main(["straighten", "--n", "4", "--file", path])

        self.assertEqual(code, 0)
        self.assertIn("1b 1b; 2b", out)

    def test_trace_to_stderr(self):
        """Testa --trace escrevendo passos em stderr."""
        code, _, err = run_main([
            "straighten", "--n", "6", "--trace",
            "--left", "1b 2b; 2b 2; 2", "--right", "1 2; 2b 3; 3b",
        ])
        self.assertEqual(code, 0)
        self.assertIn("RELSUM\tj=2", err)
        self.assertIn("OS1\tj=2", err)

    def test_config_error(self):
        """Testa código 2 para n < 3 no modo on."""
        code, _, err = run_main(["enumerate", "--n", "2", "--shape", "1"])
        self.assertEqual(code, 2)
        self.assertIn("erro", err)

    def test_parse_error(self):
        """Testa código 2 para quadro mal formado."""
        code, _, _ = run_main(
            ["straighten", "--n", "4", "--left", "1 x", "--right", "1 2"]
        )
        self.assertEqual(code, 2)

    def test_missing_pair(self):
        """Testa código 2 sem --left/--right nem --file."""
        code, _, _ = run_main(["straighten", "--n", "4"])
        self.assertEqual(code, 2)

    def test_cap_exceeded(self):
        """Testa código 4 quando a base excede o limite."""
        with patch.object(settings, "BASIS_SUITE_CAP", 10):
            code, _, err = run_main(["verify", "--n", "3", "--degree", "2"])
        self.assertEqual(code, 4)
        self.assertIn("44 > 10", err)

    def test_verification_failure(self):
        """Testa código 3 quando um exemplo embutido falha."""
        with patch("apps.cli.services.commands.WORKED_EXAMPLES", corrupted_examples()):
            code, out, _ = run_main(["paper-examples"])
        self.assertEqual(code, 3)
        self.assertIn("os2: FAIL", out)

    def test_worked_examples_pass(self):
        """Testa código 0 para os exemplos embutidos."""
        code, out, _ = run_main(["paper-examples"])
        self.assertEqual(code, 0)
        self.assertEqual(out.count("PASS"), 4)
