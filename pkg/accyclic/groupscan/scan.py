"""
Per-order almost-cyclicity surveys.

Conjugacy classes are not computed. Elements are grouped by the fingerprint
(order, charpoly), which is constant on classes but can merge several of them;
a fingerprint whose elements disagree is reported as inconsistent.
"""

import enum
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from ..accyc import (
    Mode,
    is_almost_cyclic,
)
from ..errors import CapExceeded
from ..hash import mat_hash
from ..json import Json
from ..matgf import (
    DEFAULT_ORDER_CAP,
    Mat,
    charpoly,
    kernel_for,
)
from ..numth import is_prime_power
from .closure import (
    DEFAULT_CLOSURE_CAP,
    ORDER_CHUNK,
    closure_enumerate,
)
from .sample import sample_stack
from .spec import GroupSpec

_l = logging.getLogger(__name__)

VERDICT_CHUNK = 128


@dataclass(frozen=True)
class Policy:
    """Which element orders a scan looks at. An explicit order set overrides the flags."""
    include_order_2: bool = False
    prime_power_only: bool = True
    exclude_char_multiples: bool = True
    orders: Optional[FrozenSet[int]] = None

    def admits(self, order: int, p: int) -> bool:
        if order <= 1:
            return False
        if self.orders is not None:
            return order in self.orders
        if order == 2 and not self.include_order_2:
            return False
        if self.prime_power_only and not is_prime_power(order):
            return False
        if self.exclude_char_multiples and order % p == 0:
            return False
        return True

    def json(self) -> Json:
        return {
            'include_order_2': self.include_order_2,
            'prime_power_only': self.prime_power_only,
            'exclude_char_multiples': self.exclude_char_multiples,
            'orders': sorted(self.orders) if self.orders is not None else None,
        }


DEFAULT_POLICY = Policy()

_POLICY_FLAGS = {
    'order2': ('include_order_2', True),
    'any-order': ('prime_power_only', False),
    'char-multiples': ('exclude_char_multiples', False),
}


def parse_policy(raw: str, orders: Optional[Iterable[int]] = None) -> Policy:
    """`default`, `all`, or a comma-separated subset of order2, any-order, char-multiples."""
    fixed = frozenset(orders) if orders is not None else None
    if raw == 'default':
        return Policy(orders=fixed)
    if raw == 'all':
        return Policy(include_order_2=True, prime_power_only=False, exclude_char_multiples=False, orders=fixed)
    kwargs: Dict[str, bool] = {}
    for flag in raw.split(','):
        flag = flag.strip()
        if flag not in _POLICY_FLAGS:
            raise ValueError(f'Unknown policy flag {flag!r}, expected default, all or one of {sorted(_POLICY_FLAGS)}')
        name, value = _POLICY_FLAGS[flag]
        kwargs[name] = value
    return Policy(orders=fixed, **kwargs)


class Outcome(enum.Enum):
    ALMOST_CYCLIC = 'almost-cyclic'
    NOT_ALMOST_CYCLIC = 'not-almost-cyclic'
    INCONSISTENT = 'INCONSISTENT'

    def json(self) -> Json:
        return self.value


def _merge(old: Optional[Outcome], verdict: bool) -> Outcome:
    new = Outcome.ALMOST_CYCLIC if verdict else Outcome.NOT_ALMOST_CYCLIC
    if old is None or old == new:
        return new
    return Outcome.INCONSISTENT


@dataclass
class _Tally:
    count: int = 0
    witness: str = ''
    outcomes: Dict[Mode, Outcome] = field(default_factory=dict)


@dataclass(frozen=True)
class Fingerprint:
    order: int
    charpoly: str
    count: int
    outcomes: Tuple[Tuple[Mode, Outcome], ...]
    witness: str

    def outcome(self, mode: Mode) -> Outcome:
        return dict(self.outcomes)[mode]

    def json(self) -> Json:
        return {
            'order': self.order,
            'charpoly': self.charpoly,
            'count': self.count,
            'verdicts': {m.value: o.json() for m, o in self.outcomes},
            'witness': self.witness,
        }


@dataclass(frozen=True)
class ScanReport:
    group: str
    mode: Mode
    policy: Policy
    complete: bool
    seed: Optional[int]
    surveyed: int
    skipped_over_cap: int
    fingerprints: Tuple[Fingerprint, ...]

    def for_order(self, order: int) -> Tuple[Fingerprint, ...]:
        return tuple(f for f in self.fingerprints if f.order == order)

    @property
    def orders(self) -> Tuple[int, ...]:
        return tuple(sorted({f.order for f in self.fingerprints}))

    def all_almost_cyclic(self, mode: Optional[Mode] = None) -> bool:
        mode = self.mode if mode is None else mode
        return all(f.outcome(mode) == Outcome.ALMOST_CYCLIC for f in self.fingerprints)

    @property
    def inconsistent(self) -> Tuple[Fingerprint, ...]:
        return tuple(f for f in self.fingerprints if any(o == Outcome.INCONSISTENT for _, o in f.outcomes))

    def json(self) -> Json:
        return {
            'group': self.group,
            'mode': self.mode.json(),
            'policy': self.policy.json(),
            'complete': self.complete,
            'seed': self.seed,
            'surveyed': self.surveyed,
            'skipped_over_cap': self.skipped_over_cap,
            'fingerprints': [f.json() for f in self.fingerprints],
        }


def _modes_for(mode: Mode) -> Tuple[Mode, ...]:
    if mode in (Mode.STRICT, Mode.APPENDIX):
        return (Mode.STRICT, Mode.APPENDIX)
    return (Mode.STRICT, Mode.APPENDIX, mode)


def _judge(ms: Sequence[Mat], modes: Sequence[Mode]) -> List[Tuple[str, Tuple[bool, ...]]]:
    return [(str(charpoly(m)), tuple(is_almost_cyclic(m, md).almost_cyclic for md in modes)) for m in ms]


def _survey_stack(spec: GroupSpec, elements: np.ndarray, policy: Policy, modes: Sequence[Mode],
                  order_cap: int, workers: int) -> Tuple[Dict[Tuple[int, str], _Tally], int, int]:
    kernel = kernel_for(spec.ctx)
    orders = np.concatenate([
        kernel.orders(elements[s:s + ORDER_CHUNK], order_cap) for s in range(0, elements.shape[0], ORDER_CHUNK)
    ])
    over_cap = int(np.count_nonzero(orders == 0))
    picked = [i for i, o in enumerate(orders) if o > 0 and policy.admits(int(o), spec.ctx.p)]
    mats = [Mat.from_array(spec.ctx, elements[i]) for i in picked]
    chunks = [mats[s:s + VERDICT_CHUNK] for s in range(0, len(mats), VERDICT_CHUNK)]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            judged = [r for chunk in executor.map(lambda c: _judge(c, modes), chunks) for r in chunk]
    else:
        judged = [r for chunk in chunks for r in _judge(chunk, modes)]

    tallies: Dict[Tuple[int, str], _Tally] = {}
    for i, m, (cp, verdicts) in zip(picked, mats, judged):
        tally = tallies.setdefault((int(orders[i]), cp), _Tally(witness=mat_hash(m)))
        tally.count += 1
        for md, v in zip(modes, verdicts):
            tally.outcomes[md] = _merge(tally.outcomes.get(md), v)
    return tallies, len(picked), over_cap


def scan_almost_cyclic(
        spec: GroupSpec,
        mode: Mode = Mode.STRICT,
        policy: Policy = DEFAULT_POLICY,
        *,
        cap: int = DEFAULT_CLOSURE_CAP,
        samples: int = 2000,
        seed: int = 0,
        exhaustive: Optional[bool] = None,
        order_cap: int = DEFAULT_ORDER_CAP,
        workers: int = 1) -> ScanReport:
    """
    Survey the group exhaustively when its closure fits in cap, else by sampling.
    exhaustive=True makes an oversized closure an error; exhaustive=False always samples.
    """
    elements: Optional[np.ndarray] = None
    if exhaustive is not False:
        try:
            elements = closure_enumerate(spec, cap, order_cap).elements
        except CapExceeded:
            if exhaustive:
                raise
            _l.warning(f'{spec.label} has more than {cap} elements; falling back to {samples} samples')
    complete = elements is not None
    if elements is None:
        elements = sample_stack(spec, samples, seed, workers)

    modes = _modes_for(mode)
    tallies, surveyed, over_cap = _survey_stack(spec, elements, policy, modes, order_cap, workers)
    fingerprints = tuple(
        Fingerprint(
            order=o,
            charpoly=cp,
            count=t.count,
            outcomes=tuple((md, t.outcomes[md]) for md in modes),
            witness=t.witness,
        )
        for (o, cp), t in sorted(tallies.items())
    )
    report = ScanReport(
        group=spec.label,
        mode=mode,
        policy=policy,
        complete=complete,
        seed=None if complete else seed,
        surveyed=surveyed,
        skipped_over_cap=over_cap,
        fingerprints=fingerprints,
    )
    for f in report.inconsistent:
        _l.warning(f'{spec.label}: fingerprint order={f.order} charpoly={f.charpoly} is INCONSISTENT')
    return report
