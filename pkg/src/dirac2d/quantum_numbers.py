"""Good quantum numbers of the 2-D Dirac-Coulomb problem.

States are labelled by the principal number ``n`` and the eigenvalues
``kappa`` of K = beta (sigma'_z l_z + 1/2) and ``mu`` of j_z.  The
eigenvalue ``eta`` of P = beta sigma'_z follows from K = P j_z.

Half-integers are held as twice their value (``two_kappa = 3`` means
kappa = 3/2) so every selection rule is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational, Real

from .errors import ForbiddenNegativeKappa, InvalidKappa, InvalidState, MuMismatch

DEFAULT_C = 137.03599976

# spectroscopic letters; "j" is skipped by convention
_ORBITAL_LETTERS = "spdfghiklmnoqrtuv"


@dataclass(frozen=True)
class PhysicalParams:
    """Nuclear charge, speed of light and scaled magnetic field (atomic units).

    ``B`` is the field already divided by Z**2.
    """

    Z: float = 1.0
    c: float = DEFAULT_C
    B: float = 0.0

    def __post_init__(self) -> None:
        if not self.Z > 0:
            raise ValueError(f"Z must be positive, got {self.Z!r}")
        if not self.c > 0:
            raise ValueError(f"c must be positive, got {self.c!r}")

    @property
    def lam(self) -> float:
        """lambda = (Z/c)**2."""
        return (self.Z / self.c) ** 2


def twice_half_integer(value: object) -> int:
    """Return ``2*value`` for a half-odd-integer given as str, Fraction, int or float.

    Raises InvalidKappa when the value is not of the form (2k+1)/2.
    """
    try:
        if isinstance(value, str):
            frac = Fraction(value.strip())
        elif isinstance(value, (Rational, Real)):
            frac = Fraction(value)
        else:
            raise TypeError
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InvalidKappa(f"not a number: {value!r}") from exc
    twice = 2 * frac
    if twice.denominator != 1 or twice.numerator % 2 == 0:
        raise InvalidKappa(f"{value!r} is not a half-odd integer")
    return int(twice.numerator)


def format_half(two_x: int) -> str:
    """Render a twice-stored half-integer as a fraction, e.g. -3 -> '-3/2'."""
    return f"{two_x}/2"


@dataclass(frozen=True)
class QuantumNumbers:
    """A validated state (n, kappa, mu) with derived n', eta and l.

    Use :func:`validate_state` to construct; the constructor itself does
    not check the selection rules.
    """

    n: int
    two_kappa: int
    two_mu: int

    @property
    def kappa(self) -> float:
        return self.two_kappa / 2

    @property
    def mu(self) -> float:
        return self.two_mu / 2

    @property
    def kappa_frac(self) -> Fraction:
        return Fraction(self.two_kappa, 2)

    @property
    def mu_frac(self) -> Fraction:
        return Fraction(self.two_mu, 2)

    @property
    def n_prime(self) -> int:
        # n = n' + |kappa| + 1/2
        return self.n - (abs(self.two_kappa) + 1) // 2

    @property
    def eta(self) -> int:
        return 1 if self.two_kappa == self.two_mu else -1

    @property
    def l(self) -> int:  # noqa: E743
        return abs(self.two_kappa - 1) // 2

    def with_mu(self, two_mu: int) -> "QuantumNumbers":
        return validate_state(self.n, Fraction(self.two_kappa, 2), Fraction(two_mu, 2))

    def __str__(self) -> str:
        return (
            f"{spectroscopic_label(self)} (kappa={format_half(self.two_kappa)}, "
            f"mu={format_half(self.two_mu)})"
        )


def validate_state(n: int, kappa: object, mu: object) -> QuantumNumbers:
    """Check (n, kappa, mu) against the selection rules and build the state.

    Parameters
    ----------
    n : int
        Principal quantum number, n >= 1.
    kappa, mu : str, Fraction, int or float
        Half-odd-integers, e.g. ``"3/2"``, ``Fraction(-1, 2)`` or ``1.5``.

    Raises
    ------
    InvalidKappa
        kappa is not a half-odd integer or |kappa| > n - 1/2.
    ForbiddenNegativeKappa
        n' = 0 together with kappa < 0.
    MuMismatch
        |mu| != |kappa| (or mu is not a half-odd integer).
    """
    if isinstance(n, bool) or not isinstance(n, (int, Rational)) or int(n) != n or n < 1:
        raise InvalidState(f"n must be an integer >= 1, got {n!r}")
    n = int(n)
    two_kappa = twice_half_integer(kappa)
    if abs(two_kappa) > 2 * n - 1:
        raise InvalidKappa(f"|kappa| = {abs(two_kappa)}/2 exceeds n - 1/2 for n = {n}")
    try:
        two_mu = twice_half_integer(mu)
    except InvalidKappa as exc:
        raise MuMismatch(str(exc)) from exc
    if abs(two_mu) != abs(two_kappa):
        raise MuMismatch(f"|mu| = {abs(two_mu)}/2 differs from |kappa| = {abs(two_kappa)}/2")
    qn = QuantumNumbers(n, two_kappa, two_mu)
    if qn.n_prime == 0 and two_kappa < 0:
        raise ForbiddenNegativeKappa(f"kappa = {two_kappa}/2 < 0 is not allowed for n' = 0 (n = {n})")
    return qn


def enumerate_states(n_max: int, params: PhysicalParams | None = None) -> list[QuantumNumbers]:
    """All valid states with n <= n_max, sorted by (n, |kappa|, kappa, mu).

    When ``params`` is given, states with kappa**2 <= lambda (no bound
    state exists for them) are left out.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    states = []
    for n in range(1, n_max + 1):
        for two_abs in range(1, 2 * n, 2):
            for two_kappa in (two_abs, -two_abs):
                if n - (two_abs + 1) // 2 == 0 and two_kappa < 0:
                    continue
                if params is not None and (two_kappa / 2) ** 2 <= params.lam:
                    continue
                for two_mu in (two_abs, -two_abs):
                    states.append(QuantumNumbers(n, two_kappa, two_mu))
    states.sort(key=lambda q: (q.n, abs(q.two_kappa), q.two_kappa, q.two_mu))
    return states


def table_order(states: list[QuantumNumbers]) -> list[QuantumNumbers]:
    """Order states as in the printed level tables: kappa = 1/2, -1/2, 3/2, -3/2, ..."""
    return sorted(states, key=lambda q: (q.n, abs(q.two_kappa), -q.two_kappa, -q.two_mu))


def spectroscopic_label(qn: QuantumNumbers) -> str:
    """Label such as ``"2p3/2"``: n, orbital letter for l, then |kappa|."""
    return f"{qn.n}{_ORBITAL_LETTERS[qn.l]}{abs(qn.two_kappa)}/2"
