"""
Randomized cross-validation of the place splitting engine against brute
force point counts.
"""
import logging

import numpy as np

from abelzeta.backends import create_backend
from abelzeta.funcfield import (
    CoverFamily,
    count_places,
    genus_formula,
    parse_cover_spec,
    point_count_bruteforce,
    random_cover_spec,
    sums_from_place_counts,
)
from abelzeta.options import get_default_options
from abelzeta.utils.exceptions import AbelZetaException, CoverValidationError
from abelzeta.utils.numbers import divisors, prime_power_decomposition
from abelzeta.zeta import lpoly_from_counts, predicted_S

logger = logging.getLogger(__name__)

#: The constant field orders covers are drawn over.
ORACLE_FIELD_ORDERS = (2, 3, 4, 5, 7, 8, 9)

#: The default bound on q^(2g + 1), the largest field enumerated by brute force.
ORACLE_BUDGET = 2 ** 22


class OracleMismatch:
    """A disagreement between two ways of computing S_k."""

    def __init__(self, kind, k, expected, actual):
        """
        Parameters
        ----------
        kind: str
            ``splitting`` when the place counts disagree with brute force,
            ``prediction`` when the L-polynomial does.
        k: int
            The extension degree of the constant field.
        expected: int
            The brute force value of S_k.
        actual: int
            The disagreeing value.
        """
        self.kind = kind
        self.k = k
        self.expected = expected
        self.actual = actual

    def to_dict(self):
        return {
            "kind": self.kind,
            "k": self.k,
            "expected": str(self.expected),
            "actual": str(self.actual),
        }


class OracleOutcome:
    """The result of cross-checking one cover."""

    def __init__(self, spec, genus, mismatches, error=None):

        self.spec = spec
        self.genus = genus
        self.mismatches = mismatches
        self.error = error

    @property
    def passed(self):
        """bool: Whether every S_k agreed."""
        return len(self.mismatches) == 0 and self.error is None

    @property
    def replay(self):
        """str: The command which repeats the check on this cover alone."""
        return f'abelzeta oracle --replay "{self.spec.identifier}"'

    def to_dict(self):

        value = {
            "spec": self.spec.identifier,
            "genus": self.genus,
            "passed": self.passed,
            "mismatches": [mismatch.to_dict() for mismatch in self.mismatches],
        }

        if not self.passed:
            value["replay"] = self.replay
        if self.error is not None:
            value["error"] = self.error

        return value


def check_cover(spec, corrupt=None, budget=None):
    """Compares S_k = sum_{d | k} d N_d from the place counts with brute
    force point counts for every k <= 2g + 1, and the S_k predicted by the
    L-polynomial with the same brute force values.

    Parameters
    ----------
    spec: CoverSpec
        A validated cover.
    corrupt: dict of int and int, optional
        Offsets added to the counted N_d before comparing, used to
        demonstrate that mismatches are located.
    budget: int, optional
        The largest field which may be enumerated.

    Returns
    -------
    OracleOutcome
    """
    g = genus_formula(spec)
    bound = 2 * g + 1

    counts = count_places(spec, bound, budget)

    for degree, offset in (corrupt or {}).items():

        if 1 <= degree <= bound:
            counts[degree - 1] += offset

    sums = sums_from_place_counts(counts)
    expected = [point_count_bruteforce(spec, k, budget) for k in range(1, bound + 1)]

    mismatches = [
        OracleMismatch("splitting", k, expected[k - 1], sums[k - 1])
        for k in range(1, bound + 1)
        if sums[k - 1] != expected[k - 1]
    ]

    if len(mismatches) == 0:

        lpoly = lpoly_from_counts(spec.q, g, counts)

        mismatches.extend(
            OracleMismatch("prediction", k, expected[k - 1], predicted_S(lpoly, k))
            for k in range(1, bound + 1)
            if predicted_S(lpoly, k) != expected[k - 1]
        )

    for mismatch in mismatches:

        logger.warning(
            f"{spec}: S_{mismatch.k} is {mismatch.actual} by {mismatch.kind} but "
            f"{mismatch.expected} by brute force."
        )

    return OracleOutcome(spec, g, mismatches)


def _draw_cover(rng, max_genus, budget):
    """Draws one valid cover of genus at most `max_genus` with q^(2g + 1)
    within `budget`."""
    while True:

        q = int(rng.choice(ORACLE_FIELD_ORDERS))
        p, _ = prime_power_decomposition(q)

        exponents = [m for m in divisors(q - 1) if m >= 2]

        family = CoverFamily.ArtinSchreier

        if len(exponents) > 0 and rng.integers(0, 2) == 1:
            family = CoverFamily.Kummer

        m = int(rng.choice(exponents)) if family == CoverFamily.Kummer else None
        degree = int(rng.integers(1, 2 * max_genus + 3))

        if family == CoverFamily.ArtinSchreier and degree % p == 0:
            continue

        try:
            spec = random_cover_spec(family, q, degree, rng, m, maximum_attempts=100)
        except CoverValidationError:
            continue

        g = genus_formula(spec)

        if g <= max_genus and q ** (2 * g + 1) <= budget:
            return spec


def draw_covers(seed, count, max_genus, budget=None):
    """Draws `count` random covers over q in :data:`ORACLE_FIELD_ORDERS`
    from a generator seeded with `seed`.

    Returns
    -------
    list of CoverSpec
    """
    if count < 0 or max_genus < 0:
        raise ValueError("The count and the maximum genus must be non-negative.")

    budget = ORACLE_BUDGET if budget is None else budget
    rng = np.random.default_rng(seed)

    return [_draw_cover(rng, max_genus, budget) for _ in range(count)]


class OracleResult:
    """The outcomes of an oracle run, in draw order."""

    def __init__(self, seed, outcomes):

        self.seed = seed
        self.outcomes = outcomes

    @property
    def passed(self):
        """bool: Whether every cover passed. Vacuously true for no covers."""
        return all(outcome.passed for outcome in self.outcomes)

    def failures(self):
        """list of OracleOutcome"""
        return [outcome for outcome in self.outcomes if not outcome.passed]

    def to_dict(self):
        return {
            "seed": self.seed,
            "count": len(self.outcomes),
            "passed": self.passed,
            "failures": len(self.failures()),
            "outcomes": [outcome.to_dict() for outcome in self.outcomes],
        }


def _check_task(spec, corrupt, budget):
    return check_cover(spec, corrupt, budget)


def run_oracle(
    seed,
    count,
    max_genus,
    budget=None,
    corrupt=None,
    number_of_threads=None,
    specs=None,
):
    """Cross-checks `count` seeded random covers, or the given covers.

    Parameters
    ----------
    seed: int
        The seed of the cover generator.
    count: int
        The number of covers to draw.
    max_genus: int
        The largest genus drawn.
    budget: int, optional
        The bound on q^(2g + 1).
    corrupt: dict of int and int, optional
        Offsets injected into the counted N_d of every cover.
    number_of_threads: int, optional
        The number of worker threads.
    specs: list of CoverSpec or str, optional
        Covers to check instead of drawing them.

    Returns
    -------
    OracleResult
    """
    budget = ORACLE_BUDGET if budget is None else budget

    if specs is None:
        specs = draw_covers(seed, count, max_genus, budget)
    else:
        specs = [
            parse_cover_spec(spec, budget) if isinstance(spec, str) else spec
            for spec in specs
        ]

    if number_of_threads is None:
        number_of_threads = get_default_options().number_of_threads

    logger.info(f"Cross-checking {len(specs)} covers.")

    outcomes = []

    with create_backend(number_of_threads) as backend:

        futures = [
            backend.submit_task(_check_task, spec=spec, corrupt=corrupt, budget=budget)
            for spec in specs
        ]

        for spec, future in zip(specs, futures):

            result = future.result()

            if isinstance(result, AbelZetaException):
                result = OracleOutcome(spec, genus_formula(spec), [], result.summary())

            status = "pass" if result.passed else "MISMATCH"
            logger.info(f"{spec}: {status} (g = {result.genus}).")
            outcomes.append(result)

    return OracleResult(seed, outcomes)
