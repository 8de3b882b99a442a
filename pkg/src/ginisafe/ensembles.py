"""Monte Carlo simulation of random-safe ensembles.

An ensemble is either INDEPENDENT (positions sampled independently from the
rows of a row Markov matrix) or CORRELATED (whole opening sequences sampled
from a joint Markov tensor).  Sampling is reproducible: the generator is a
seeded numpy PCG64, and categorical draws use inverse-CDF lookup over the
canonical code order, so identical seeds give identical sample streams.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    CorrelatedSpecRejectedError,
    DimensionMismatchError,
    ValidationError,
)
from .markov import (
    FunctionMap,
    product_probabilities,
    validate_markov_tensor,
    validate_row_markov,
)

INDEPENDENT = "independent"
CORRELATED = "correlated"

#: Name of the deterministic generator fixed by this build.
RNG_ALGORITHM = "PCG64"

#: Default sample count when the caller does not specify one.
DEFAULT_SAMPLES = 100_000


def make_rng(seed: int) -> np.random.Generator:
    """Seeded deterministic generator (PCG64) for all sampling in this module."""
    return np.random.Generator(np.random.PCG64(int(seed)))


def shard_rng(seed: int, shard: int) -> np.random.Generator:
    """Independent substream derived from (seed, shard-index).

    Sharded sampling uses one substream per worker; combining shard counts by
    addition reproduces a single-threaded run over the same substreams.
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((int(seed), int(shard)))))


@dataclass(frozen=True)
class EnsembleSpec:
    """A random-safe ensemble: independent rows or a correlated joint tensor."""

    kind: str
    matrix: np.ndarray | None = None
    tensor: np.ndarray | None = None

    @classmethod
    def independent(cls, matrix) -> "EnsembleSpec":
        return cls(kind=INDEPENDENT, matrix=validate_row_markov(matrix))

    @classmethod
    def correlated(cls, tensor) -> "EnsembleSpec":
        return cls(kind=CORRELATED, tensor=validate_markov_tensor(tensor))

    def __post_init__(self):
        if self.kind == INDEPENDENT:
            if self.matrix is None:
                raise ValidationError("independent ensemble requires a matrix")
        elif self.kind == CORRELATED:
            if self.tensor is None:
                raise ValidationError("correlated ensemble requires a tensor")
        else:
            raise ValidationError(f"unknown ensemble kind {self.kind!r}")

    @property
    def d(self) -> int:
        if self.kind == INDEPENDENT:
            return self.matrix.shape[0]
        from .markov import tensor_dimension

        return tensor_dimension(self.tensor.size)

    def exact_tensor(self) -> np.ndarray:
        """The exact joint distribution over opening sequences, code order."""
        if self.kind == INDEPENDENT:
            return product_probabilities(self.matrix)
        return np.array(self.tensor)


def _categorical(cdf: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Inverse-CDF lookup; clips the (measure-zero) overflow at the top."""
    idx = np.searchsorted(cdf, u, side="right")
    return np.minimum(idx, cdf.size - 1)


def sample_codes(spec: EnsembleSpec, n: int, rng: np.random.Generator) -> np.ndarray:
    """Draw n opening sequences, returned as canonical integer codes.

    INDEPENDENT specs draw one uniform per position (row-major order);
    CORRELATED specs draw one uniform per sequence against the tensor CDF.
    """
    if n < 1:
        raise ValidationError("sample count must be >= 1")
    d = spec.d
    if spec.kind == INDEPENDENT:
        cdfs = np.cumsum(spec.matrix, axis=1)
        u = rng.random((n, d))
        codes = np.zeros(n, dtype=np.int64)
        for i in range(d):
            codes += _categorical(cdfs[i], u[:, i]) * d**i
        return codes
    cdf = np.cumsum(spec.tensor)
    return _categorical(cdf, rng.random(n))


def sample_sequence(spec: EnsembleSpec, rng: np.random.Generator) -> FunctionMap:
    """Draw a single opening sequence from the ensemble."""
    code = int(sample_codes(spec, 1, rng)[0])
    return FunctionMap.from_code(code, spec.d)


def empirical_tensor(spec: EnsembleSpec, n: int, rng: np.random.Generator) -> np.ndarray:
    """Empirical joint distribution over n sampled sequences (a Markov tensor)."""
    d = spec.d
    counts = np.bincount(sample_codes(spec, n, rng), minlength=d**d)
    return counts / float(n)


@dataclass(frozen=True)
class McEstimate:
    """A Bernoulli Monte Carlo estimate with its standard error."""

    value: float
    stderr: float
    n: int


def collision_probability_mc(
    a: EnsembleSpec, b: EnsembleSpec, n: int, rng: np.random.Generator
) -> McEstimate:
    """Fraction of n paired draws whose opening sequences coincide.

    For independent ensembles this converges to
    ``scalar_product(a.matrix, b.matrix)``.  The collision interpretation of
    the scalar product assumes independent positions, so correlated specs are
    rejected.  Draw order is fixed: the full block for ``a``, then ``b``.
    """
    for name, spec in (("first", a), ("second", b)):
        if spec.kind != INDEPENDENT:
            raise CorrelatedSpecRejectedError(
                f"{name} ensemble is correlated; collision probability is "
                "defined for independent ensembles"
            )
    if a.d != b.d:
        raise DimensionMismatchError(f"ensembles have dimensions {a.d} and {b.d}")
    codes_a = sample_codes(a, n, rng)
    codes_b = sample_codes(b, n, rng)
    p_hat = float(np.mean(codes_a == codes_b))
    stderr = float(np.sqrt(p_hat * (1.0 - p_hat) / n))
    return McEstimate(value=p_hat, stderr=stderr, n=int(n))


def merge(a: EnsembleSpec, b: EnsembleSpec, lam: float) -> EnsembleSpec:
    """Merge two ensembles: a fraction ``lam`` of safes from ``a``, rest from ``b``.

    Merging mixes the joint sequence distributions.  A mixture of two product
    distributions is generally not a product distribution, so merging two
    INDEPENDENT specs yields a CORRELATED spec (except at lam = 0 or 1, where
    the untouched input is returned).
    """
    if not 0.0 <= lam <= 1.0:
        raise ValidationError(f"mixing weight {lam} outside [0, 1]")
    if a.d != b.d:
        raise DimensionMismatchError(f"ensembles have dimensions {a.d} and {b.d}")
    if lam == 1.0:
        return a
    if lam == 0.0:
        return b
    mixed = lam * a.exact_tensor() + (1.0 - lam) * b.exact_tensor()
    return EnsembleSpec.correlated(mixed)
