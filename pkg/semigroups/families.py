"""
The two families with unboundedly large minimal decompositions.

- S_{k,n} = <k, n, n+1, ..., n+k-1> for n >= k^2 - 1 and k not dividing n - 1.
  Every decomposition has at least d - 1 components, d the least prime of k.
- Half-lines {0} u {n+1, n+2, ...}. With a_1 = 1, a_i = a_{i-1}! + a_{i-1}
  and a_k! dividing n - a_k, the xi-sets of n - a_1, ..., n - a_k are
  singletons, so every decomposition needs at least k components.

Witness arithmetic uses Python ints throughout; only building a table is
capacity-gated.
"""

import math
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

import config
from semigroups.core import Semigroup
from semigroups.errors import CapacityExceeded, HypothesisViolated, InternalVerificationFailed

# Set up logging
logger = logging.getLogger("semidecomp.families")


@dataclass(frozen=True)
class FamilyWitness:
    """Parameters of one family instance."""

    kind: str  # 'skn' or 'halfline'
    k: int
    n: int
    d: int = 0
    a_sequence: Tuple[int, ...] = ()
    materializable: bool = True

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'kind': self.kind,
            'k': self.k,
            'n': self.n,
            'materializable': self.materializable,
        }
        if self.kind == 'skn':
            data['d'] = self.d
        else:
            data['a_sequence'] = list(self.a_sequence)
        return data


def smallest_prime_factor(k: int) -> int:
    """Least prime dividing k, by trial division.

    Args:
        k: Integer >= 2

    Returns:
        The smallest prime divisor of k
    """
    if k < 2:
        raise HypothesisViolated("k >= 2", {'k': k})
    if k % 2 == 0:
        return 2
    for p in range(3, math.isqrt(k) + 1, 2):
        if k % p == 0:
            return p
    return k


def is_prime(p: int) -> bool:
    return p >= 2 and smallest_prime_factor(p) == p


def _materializable(n: int) -> bool:
    return n + 2 <= config.TABLE_CAPACITY


def check_skn_hypotheses(k: int, n: int) -> None:
    """Raise HypothesisViolated unless k >= 2, n >= k^2 - 1 and k does not divide n - 1."""
    if k < 2:
        raise HypothesisViolated("k >= 2", {'k': k})
    if n < k * k - 1:
        raise HypothesisViolated("n >= k^2 - 1", {'k': k, 'n': n, 'k^2-1': k * k - 1})
    if (n - 1) % k == 0:
        raise HypothesisViolated("k does not divide n - 1", {'k': k, 'n': n, 'n-1': n - 1})


def skn_witness(k: int, n: int) -> FamilyWitness:
    """Describe S_{k,n} without building it."""
    check_skn_hypotheses(k, n)
    return FamilyWitness(kind='skn', k=k, n=n, d=smallest_prime_factor(k),
                         materializable=_materializable(n))


def skn(k: int, n: int) -> Semigroup:
    """Build S_{k,n} = <k, n, n+1, ..., n+k-1>.

    Args:
        k: Integer >= 2
        n: Integer with n >= k^2 - 1 and k not dividing n - 1

    Returns:
        The semigroup, whose Frobenius number is n - 1

    Raises:
        HypothesisViolated, CapacityExceeded
    """
    check_skn_hypotheses(k, n)
    if not _materializable(n):
        raise CapacityExceeded(n + 1, config.TABLE_CAPACITY)
    semigroup = Semigroup.from_generators([k] + list(range(n, n + k)))
    if semigroup.frobenius != n - 1:
        raise InternalVerificationFailed(f"F(S_{{{k},{n}}}) = {semigroup.frobenius}, expected {n - 1}")
    return semigroup


def prime_square_semigroup(p: int) -> Semigroup:
    """<p, p^2+1, ..., p^2+p-1> for a prime p; its Frobenius number is p^2 - 1."""
    if not is_prime(p):
        raise HypothesisViolated("p is prime", {'p': p})
    semigroup = Semigroup.from_generators([p] + list(range(p * p + 1, p * p + p)))
    if semigroup.frobenius != p * p - 1:
        raise InternalVerificationFailed(f"F = {semigroup.frobenius}, expected {p * p - 1}")
    return semigroup


def halfline(n: int) -> Semigroup:
    """The half-line {0} u {n+1, n+2, ...}.

    Raises:
        HypothesisViolated: If n < 1
        CapacityExceeded: If the table would not fit
    """
    if n < 1:
        raise HypothesisViolated("n >= 1", {'n': n})
    if not _materializable(n):
        raise CapacityExceeded(n + 2, config.TABLE_CAPACITY)
    return Semigroup(1 | (1 << (n + 1)))


def factorial_sequence(k: int) -> List[int]:
    """a_1 = 1 and a_i = a_{i-1}! + a_{i-1}, up to a_k."""
    if k < 1:
        raise HypothesisViolated("k >= 1", {'k': k})
    sequence = [1]
    while len(sequence) < k:
        previous = sequence[-1]
        sequence.append(math.factorial(previous) + previous)
    return sequence


def _least_witness_n(a_k: int) -> int:
    """Least n = a_k + j * a_k! with n - a_k >= floor(n/2) + 1."""
    modulus = math.factorial(a_k)
    j = 0
    while True:
        n = a_k + j * modulus
        if n - a_k >= n // 2 + 1:
            return n
        j += 1


def halfline_witness(k: int) -> FamilyWitness:
    """The factorial sequence and the least feasible n for the half-line family.

    Args:
        k: Number of forced components, >= 1

    Returns:
        A FamilyWitness; materializable is False when n exceeds table capacity

    Raises:
        CapacityExceeded: If a_k! is too large to compute (k >= 5)
    """
    sequence = factorial_sequence(k)
    if sequence[-1] > config.FACTORIAL_LIMIT:
        raise CapacityExceeded(sequence[-1], config.FACTORIAL_LIMIT, "factorial argument a_k =")
    n = _least_witness_n(sequence[-1])
    witness = FamilyWitness(kind='halfline', k=k, n=n, a_sequence=tuple(sequence),
                            materializable=_materializable(n))
    logger.info(f"Half-line witness for k={k}: a_k={sequence[-1]}, "
                f"n has {len(str(n))} digits, materializable={witness.materializable}")
    return witness


def gap_lemma_bound(k: int, n: int) -> int:
    """Count i in 1..d-1 with n - i a gap of S_{k,n}.

    Each such gap forces a component with Frobenius number n - i, so the
    count bounds every decomposition from below.
    """
    check_skn_hypotheses(k, n)
    d = smallest_prime_factor(k)
    semigroup = skn(k, n)
    return sum(1 for i in range(1, d) if not semigroup.contains(n - i))


def halfline_singleton_check(k: int) -> List[Tuple[int, int, Tuple[int, ...]]]:
    """xi(n - a_i) for each i, on the least half-line witness for k.

    Returns:
        (a_i, n - a_i, xi(n - a_i)) triples

    Raises:
        CapacityExceeded: If the witness is too large to build
    """
    # Imported here: decomposition builds on this module
    from semigroups.decomposition import xi

    witness = halfline_witness(k)
    if not witness.materializable:
        raise CapacityExceeded(witness.n + 2, config.TABLE_CAPACITY)
    semigroup = halfline(witness.n)
    rows = []
    for a in witness.a_sequence:
        value = witness.n - a
        rows.append((a, value, xi(semigroup, value).members))
    return rows
