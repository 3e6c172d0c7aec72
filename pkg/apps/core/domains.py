"""
Domínios de coeficientes exatos.

Responsabilidade:
- ℚ via fractions.Fraction
- ℤ[1/2] (racionais com denominador potência de 2)
- 𝔽_p para p primo ímpar via sympy.GF
- NÃO usar ponto flutuante em lugar nenhum
"""

from dataclasses import dataclass, field
from fractions import Fraction

import sympy as sp

from apps.core.exceptions import CoefficientDomainError


def is_power_of_two(value: int) -> bool:
    return value > 0 and value & (value - 1) == 0


def is_dyadic(value: Fraction) -> bool:
    """Verifica se o denominador de ``value`` é potência de 2."""
    return is_power_of_two(Fraction(value).denominator)


@dataclass(frozen=True)
class RationalDomain:
    name: str = "q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    @property
    def characteristic(self) -> int:
        return 0

    def convert(self, value):
        if isinstance(value, str):
            return Fraction(value.strip())
        return Fraction(value)

    def half(self):
        return Fraction(1, 2)

    def is_zero(self, value) -> bool:
        return value == 0

    def format(self, value) -> str:
        return str(Fraction(value))

    def parse(self, text: str):
        return self.convert(text)


@dataclass(frozen=True)
class DyadicDomain(RationalDomain):
    name: str = "zhalf"

    def convert(self, value):
        number = super().convert(value)
        if not is_dyadic(number):
            raise CoefficientDomainError(
                f"Valor {number} fora de ℤ[1/2]: denominador não é potência de 2"
            )
        return number


@dataclass(frozen=True)
class PrimeFieldDomain:
    p: int
    gf: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.p == 2 or not sp.isprime(self.p):
            raise CoefficientDomainError(
                f"Característica inválida: {self.p} (exige primo ímpar)"
            )
        object.__setattr__(self, "gf", sp.GF(self.p))

    @property
    def name(self) -> str:
        return f"f{self.p}"

    @property
    def zero(self):
        return self.gf.zero

    @property
    def one(self):
        return self.gf.one

    @property
    def characteristic(self) -> int:
        return self.p

    def convert(self, value):
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, type(self.gf.zero)):
            return value
        number = Fraction(value)
        if number.denominator % self.p == 0:
            raise CoefficientDomainError(
                f"Denominador {number.denominator} não é invertível em 𝔽_{self.p}"
            )
        return self.gf(number.numerator) / self.gf(number.denominator)

    def half(self):
        return self.one / self.gf(2)

    def is_zero(self, value) -> bool:
        return not value

    def format(self, value) -> str:
        return str(self.gf.to_int(value))

    def parse(self, text: str):
        return self.convert(text)


QQ = RationalDomain()
ZHALF = DyadicDomain()


def parse_domain(spec: str):
    """
    Constrói o domínio a partir do texto de configuração.

    Aceita: "q", "zhalf", "f<p>" (ex.: "f5").
    """
    text = (spec or "").strip().lower()

    if text in {"q", "qq"}:
        return QQ

    if text in {"zhalf", "z_half", "z[1/2]"}:
        return ZHALF

    if text.startswith("f") and text[1:].isdigit():
        return PrimeFieldDomain(int(text[1:]))

    raise CoefficientDomainError(f"Domínio de coeficientes desconhecido: {spec!r}")


def ensure_same_domain(first, second):
    if first != second:
        raise CoefficientDomainError(
            f"Mistura de domínios não permitida: {first.name} e {second.name}"
        )
    return first
