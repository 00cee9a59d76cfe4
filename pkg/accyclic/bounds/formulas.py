"""
Lower bounds for the dimension of a non-trivial cross-characteristic projective
irreducible representation, one entry per formula id.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Mapping,
    Optional,
    Tuple,
)

from ..errors import OutOfDomain
from ..json import Json
from ..numth import (
    Rational,
    twisted_exponent,
    prime_power,
)

_l = logging.getLogger(__name__)

Formula = Callable[[int, int, Optional[int]], Rational]


def _exact(v: Fraction) -> Rational:
    if v.denominator == 1:
        return v.numerator
    return v


def kappa(m: int, q: int, ell: Optional[int]) -> int:
    """1 if ell divides (q^m-1)/(q-1); an unknown ell counts as dividing."""
    if ell is None:
        return 1
    return 1 if ((q ** m - 1) // (q - 1)) % ell == 0 else 0


def _md6_1(n: int, q: int, ell: Optional[int]) -> Rational:
    return _exact(Fraction(q - 1, math.gcd(2, q - 1)))


def _md6_2(n: int, q: int, ell: Optional[int]) -> Rational:
    return (q ** n - 1) // (q - 1) - 2


def _md6_3(n: int, q: int, ell: Optional[int]) -> Rational:
    if n % 2 == 1:
        return _exact(Fraction(q ** n - q, q + 1))
    return _exact(Fraction(q ** n - 1, q + 1))


def _md6_4(n: int, q: int, ell: Optional[int]) -> Rational:
    return (q ** n - 1) // 2


def _md6_5(n: int, q: int, ell: Optional[int]) -> Rational:
    return _exact(Fraction(q * (q ** n - 1) * (q ** (n - 1) - 1), 2 * (q + 1)))


def _md6_6(n: int, q: int, ell: Optional[int]) -> Rational:
    if q == 3:
        return _exact(Fraction((3 ** n - 1) * (3 ** n - 3), 8))
    return _exact(Fraction(q ** (2 * n) - 1, q * q - 1)) - 2


def _md6_7(n: int, q: int, ell: Optional[int]) -> Rational:
    if q < 4:
        return _exact(Fraction((q ** n - 1) * (q ** (n - 1) - 1), q * q - 1))
    return _exact(Fraction((q ** n - 1) * (q ** (n - 1) + q), q * q - 1)) - 2


def _md6_8(n: int, q: int, ell: Optional[int]) -> Rational:
    return _exact(Fraction(q * (q ** n + 1) * (q ** (n - 2) - 1), q * q - 1)) - 1


def _gmst2_a(n: int, q: int, ell: Optional[int]) -> Rational:
    if n == 3:
        return _exact(Fraction((q - 1) * (q * q - 1), math.gcd(3, q - 1)))
    if n == 4:
        return _exact(Fraction((q - 1) * (q ** 3 - 1), math.gcd(2, q - 1)))
    inner = Fraction(q ** (n - 2) - q, q - 1) - kappa(n - 2, q, ell)
    return _exact((q ** (n - 1) - 1) * inner)


def _gmst2_b1(n: int, q: int, ell: Optional[int]) -> Rational:
    tail = q ** (n - 2) - q if n % 2 == 1 else q ** (n - 2) - 1
    return _exact(Fraction(q ** (n - 2) * (q - 1) * tail, q + 1))


def _gmst2_b2(n: int, q: int, ell: Optional[int]) -> Rational:
    base = (q * q + 1) * (q * q - q + 1)
    if q % 2 == 1:
        return (base - 2) // 2
    return base - 1


def _gmst2_b3(n: int, q: int, ell: Optional[int]) -> Rational:
    if (q + 1) % 3 == 0:
        return _exact(Fraction((q - 1) * (q * q + 3 * q + 2), 6))
    return _exact(Fraction(2 * q ** 3 - q * q + 2 * q - 3, 3))


def _sigma(n: int, q: int, ell: Optional[int]) -> Rational:
    return _exact(Fraction((q ** n - 1) * (q ** n - q), 2 * (q + 1)))


def _lu(n: int, q: int, ell: Optional[int]) -> Rational:
    return _exact(Fraction(q ** n - q, q + 1))


def _exc_2b2(n: int, q: int, ell: Optional[int]) -> Rational:
    e = twisted_exponent(q, 2)
    return 2 ** e * (q - 1)


def _exc_3d4(n: int, q: int, ell: Optional[int]) -> Rational:
    return q ** 3 * (q * q - 1)


def _any(n: int, q: int) -> bool:
    return True


@dataclass(frozen=True)
class DimBound:
    formula_id: str
    family: str
    cite: str
    domain: str
    formula: Formula = field(compare=False)
    in_domain: Callable[[int, int], bool] = field(compare=False, default=_any)
    overrides: Mapping[Tuple[int, int], int] = field(default_factory=dict)
    excluded: FrozenSet[Tuple[int, int]] = frozenset()
    uses_n: bool = True

    def evaluate(self, n: int, q: int, ell: Optional[int] = None) -> Rational:
        prime_power(q)
        key = (n, q) if self.uses_n else (0, q)
        if key in self.overrides:
            return self.overrides[key]
        if key in self.excluded or not self.in_domain(n, q):
            raise OutOfDomain(f'{self.formula_id} does not cover n={n} q={q} ({self.domain})')
        value = self.formula(n, q, ell)
        assert value >= 1, (self.formula_id, n, q, value)
        return value

    def json(self) -> Json:
        return {
            'formula_id': self.formula_id,
            'family': self.family,
            'cite': self.cite,
            'domain': self.domain,
            'overrides': [[n, q, v] for (n, q), v in sorted(self.overrides.items())],
        }


DIM_BOUNDS: Dict[str, DimBound] = {
    b.formula_id: b for b in [
        DimBound(
            'md6.1', 'PSL2', 'md6:1', 'q >= 4',
            _md6_1,
            in_domain=lambda n, q: q >= 4,
            overrides={(0, 4): 2, (0, 9): 3},
            uses_n=False,
        ),
        DimBound(
            'md6.2', 'PSL', 'md6:2', 'n >= 3',
            _md6_2,
            in_domain=lambda n, q: n >= 3,
            overrides={(3, 2): 2, (3, 4): 4, (4, 2): 7, (4, 3): 26},
        ),
        DimBound(
            'md6.3', 'PSU', 'md6:3', 'n >= 3',
            _md6_3,
            in_domain=lambda n, q: n >= 3,
            overrides={(4, 2): 4, (4, 3): 6},
        ),
        DimBound(
            'md6.4', 'PSp', 'md6:4', 'rank n >= 2, q odd',
            _md6_4,
            in_domain=lambda n, q: n >= 2 and q % 2 == 1,
        ),
        DimBound(
            'md6.5', 'PSp', 'md6:5', 'rank n >= 2, q even, (n,q) != (4,2)',
            _md6_5,
            in_domain=lambda n, q: n >= 2 and q % 2 == 0,
            overrides={(2, 2): 2},
            excluded=frozenset({(4, 2)}),
        ),
        DimBound(
            'md6.6', 'Omega-odd', 'md6:6', 'rank n >= 3, q odd',
            _md6_6,
            in_domain=lambda n, q: n >= 3 and q % 2 == 1,
            overrides={(3, 3): 27},
        ),
        DimBound(
            'md6.7', 'Omega-plus', 'md6:7', 'n >= 4',
            _md6_7,
            in_domain=lambda n, q: n >= 4,
            overrides={(4, 2): 8},
        ),
        DimBound(
            'md6.8', 'Omega-minus', 'md6:8', 'n >= 4',
            _md6_8,
            in_domain=lambda n, q: n >= 4,
            overrides={(4, 2): 32, (4, 4): 1026, (5, 2): 151, (5, 3): 2376},
        ),
        DimBound(
            'gmst2.A', 'PSL', 'gmst2:A', 'n >= 3, (n,q) not (3,2) (3,4) (4,2)',
            _gmst2_a,
            in_domain=lambda n, q: n >= 3,
            overrides={(4, 3): 26, (6, 2): 61, (6, 3): 362},
            excluded=frozenset({(3, 2), (3, 4), (4, 2)}),
        ),
        DimBound(
            'gmst2.B1', 'PSU', 'gmst2:B1', 'n >= 5, (n,q) != (6,2)',
            _gmst2_b1,
            in_domain=lambda n, q: n >= 5,
            excluded=frozenset({(6, 2)}),
        ),
        DimBound(
            'gmst2.B2', 'PSU', 'gmst2:B2', 'n = 4, q > 3',
            _gmst2_b2,
            in_domain=lambda n, q: n == 4 and q > 3,
        ),
        DimBound(
            'gmst2.B3', 'PSU', 'gmst2:B3', 'n = 3, q >= 5',
            _gmst2_b3,
            in_domain=lambda n, q: n == 3 and q >= 5,
        ),
        DimBound(
            'gmst2.C', 'PSp', 'gmst2:C', 'rank n >= 2, q odd',
            _sigma,
            in_domain=lambda n, q: n >= 2 and q % 2 == 1,
        ),
        DimBound(
            'sp2.even', 'PSp', 'SP2', 'rank n >= 2, q even, (n,q) != (2,2)',
            _sigma,
            in_domain=lambda n, q: n >= 2 and q % 2 == 0,
            excluded=frozenset({(2, 2)}),
        ),
        DimBound(
            'lu', 'PSU', 'LU', 'n >= 5',
            _lu,
            in_domain=lambda n, q: n >= 5,
        ),
        DimBound(
            'exc.2B2', '2B2', 'except:2B2', 'q = 2^(2e+1), e >= 1',
            _exc_2b2,
            uses_n=False,
        ),
        DimBound(
            'exc.3D4', '3D4', 'except:3D4', 'any q',
            _exc_3d4,
            uses_n=False,
        ),
    ]
}


def dim_bound(formula_id: str) -> DimBound:
    try:
        return DIM_BOUNDS[formula_id]
    except KeyError:
        raise OutOfDomain(f'Unknown dimension formula {formula_id!r}, expected one of {sorted(DIM_BOUNDS)}')


def dim_lower(formula_id: str, n: int, q: int, ell: Optional[int] = None) -> Rational:
    """
    Exact lower bound for the dimension; ell=None is the worst case (every kappa is 1).
    Formulas without a rank ignore n.
    """
    return dim_bound(formula_id).evaluate(n, q, ell)
