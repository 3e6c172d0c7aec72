"""
Exemplos trabalhados embutidos, com sinais exatos.

Cada exemplo guarda a entrada e o certificado esperado (uma linha por
termo: coef, expoente de γ, S, T separados por tabulação).
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class WorkedExample:
    name: str
    kind: str
    n: int
    left: str
    right: str
    index: int
    expected: tuple


def _lines(*terms) -> tuple:
    return tuple("\t".join((coef, "0", left, right)) for coef, left, right in terms)


MEAD_RIGHT = "1b 1; 2b 2; 3"
DROP_LEFT = "1 1; 2b; 2; 3"
OS1_RIGHT = "1 2; 2b 3; 3b"
OS2_RIGHT = "1 2; 2b; 2"

WORKED_EXAMPLES = (
    WorkedExample(
        name="mead-two-column",
        kind="GL",
        n=6,
        left="1 1; 2 2b; 3",
        right=MEAD_RIGHT,
        index=2,
        expected=_lines(
            ("1", "1 1; 2b 2; 3", MEAD_RIGHT),
            ("-1", "1 1; 2b 3; 2", MEAD_RIGHT),
            ("-1", DROP_LEFT, "1 1b; 2b; 2; 3"),
            ("-1", DROP_LEFT, "1b 2b; 1; 2; 3"),
            ("-1", DROP_LEFT, "1b 3; 1; 2b; 2"),
        ),
    ),
    WorkedExample(
        name="os1",
        kind="OS1",
        n=6,
        left="1b 2b; 2b 2; 2",
        right=OS1_RIGHT,
        index=2,
        expected=_lines(
            ("1", "1b 2; 2b 3; 3b", OS1_RIGHT),
            ("1", "1b 2; 2b 3b; 3", OS1_RIGHT),
            ("1", "1b 2b; 2 3; 3b", OS1_RIGHT),
            ("1", "1b 2b; 2 3b; 3", OS1_RIGHT),
            ("-1", "1b 3b; 3b 3; 3", OS1_RIGHT),
            ("1", "1b 1b; 1", "1 3; 3b"),
            ("1", "1b 1b; 1", "1 2; 2b"),
            ("-1", "1b", "1"),
        ),
    ),
    WorkedExample(
        name="os2",
        kind="OS2",
        n=7,
        left="1b 2b; 1; 2",
        right=OS2_RIGHT,
        index=2,
        expected=_lines(
            ("-1", "1b 2; 1; 2b", OS2_RIGHT),
            ("-1", "1b 3; 1; 3b", OS2_RIGHT),
            ("-1", "1b 3b; 1; 3", OS2_RIGHT),
            ("-1", "1b 0; 1; 0", OS2_RIGHT),
            ("-1", "1b; 1", "1; 2"),
        ),
    ),
    WorkedExample(
        name="os3",
        kind="OS3",
        n=6,
        left="1 1; 2b 2; 3",
        right=MEAD_RIGHT,
        index=2,
        expected=_lines(
            ("1/2", "1 1; 2b 3; 2", MEAD_RIGHT),
            ("-1/2", "1 1; 3b 3; 3", MEAD_RIGHT),
            ("1/2", "1 1; 3", "2b 2; 3"),
            ("1/2", "1 1; 3", "1b 1; 3"),
            ("1/2", DROP_LEFT, "1 1b; 2b; 2; 3"),
            ("1/2", DROP_LEFT, "1b 2b; 1; 2; 3"),
            ("1/2", DROP_LEFT, "1b 3; 1; 2b; 2"),
        ),
    ),
)
