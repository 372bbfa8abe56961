"""Monte Carlo estimation of path falsification probabilities.

Each trial builds one authentication-path fold from scratch: a fresh random
path, a fresh base datum D, and a fresh substitute D' (resampled while it
equals D), then counts whether both data fold to the same root.  Trials are
therefore independent Bernoulli draws, and the per-cell z-score against the
closed-form probability is a clean known-p binomial statistic.

Path elements are full-width random values (32 bytes) by default.  That is
what the closed form models: every level then contributes an independent
2^-b collision opportunity.  The opt-in "truncated" mode draws b-bit path
elements instead -- faithful to a fully truncated tree, but at small b the
handful of distinct (node, sibling) fold inputs makes levels strongly
dependent and the closed form no longer applies (try b <= 4 and watch the
z-scores blow up).

Reproducibility: every experiment derives its own 64-bit seed from
(master_seed, bits, path_len, experiment_index), so results are identical
across runs, platforms, and worker counts.  Draws come from numpy's
default PCG64 generator in a fixed order (path bytes, base data, substitute
data, then per-row resamples); golden match counts must be regenerated if
either the generator or the draw order changes.
"""

from __future__ import annotations

import hashlib
import string
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import mpmath
import numpy as np
from mpmath import mpf

from .hashing import IDEAL, SHA256, HashSpec, OracleState
from .probability import PRECISION_DPS, PathParams, exact_falsification_prob

ALPHANUMERIC = "alphanumeric"
ALPHABET = string.ascii_letters + string.digits
_ALPHABET_CODES = np.frombuffer(ALPHABET.encode("ascii"), dtype=np.uint8)

WIDE = "wide"
TRUNCATED = "truncated"

# Width of a wide path element; matches the full SHA-256 digest.
WIDE_SIBLING_BYTES = 32


@dataclass(frozen=True)
class ExperimentConfig:
    bits: int
    path_len: int
    trials_per_experiment: int = 1000
    num_experiments: int = 100
    data_length: int = 16
    alphabet: str = ALPHANUMERIC
    oracle_kind: str = SHA256
    sibling_mode: str = WIDE
    master_seed: int = 0

    def __post_init__(self) -> None:
        self.hash_spec()  # validates oracle_kind and bits range
        if self.path_len < 0:
            raise ValueError(f"path_len must be non-negative, got {self.path_len}")
        if self.trials_per_experiment < 1:
            raise ValueError("trials_per_experiment must be >= 1")
        if self.num_experiments < 1:
            raise ValueError("num_experiments must be >= 1")
        if self.data_length < 1:
            raise ValueError("data_length must be >= 1")
        if self.alphabet != ALPHANUMERIC:
            raise ValueError(f"unsupported alphabet {self.alphabet!r}")
        if self.sibling_mode not in (WIDE, TRUNCATED):
            raise ValueError(f"sibling_mode must be {WIDE!r} or {TRUNCATED!r}")
        if not 0 <= self.master_seed < (1 << 64):
            raise ValueError("master_seed must be a 64-bit unsigned integer")

    def hash_spec(self) -> HashSpec:
        return HashSpec(algorithm=self.oracle_kind, bits=self.bits)

    @property
    def total_trials(self) -> int:
        return self.trials_per_experiment * self.num_experiments

    @property
    def sibling_nbytes(self) -> int:
        if self.sibling_mode == WIDE:
            return WIDE_SIBLING_BYTES
        return self.hash_spec().nbytes


@dataclass(frozen=True)
class CellResult:
    config: ExperimentConfig
    matches: int
    total_trials: int
    empirical_p: float
    exact_p: float
    std_error: float
    z_score: float


@dataclass(frozen=True)
class SimulationReport:
    cells: list[CellResult]
    master_seed: int
    duration_seconds: float


def _seed_hash(tag: str, master_seed: int, bits: int, path_len: int, index: int) -> int:
    text = f"{tag}:{master_seed}:{bits}:{path_len}:{index}"
    return int.from_bytes(hashlib.sha256(text.encode("ascii")).digest()[-8:], "big")


def derive_cell_seed(
    master_seed: int, bits: int, path_len: int, experiment_index: int
) -> int:
    """Low 64 bits of SHA-256("seed:<master>:<bits>:<path_len>:<index>")."""
    return _seed_hash("seed", master_seed, bits, path_len, experiment_index)


def _derive_oracle_seed(
    master_seed: int, bits: int, path_len: int, experiment_index: int
) -> int:
    # Same construction, distinct tag, so the oracle's randomness never
    # overlaps the draw stream.
    return _seed_hash("oracle", master_seed, bits, path_len, experiment_index)


def _node_fn(config: ExperimentConfig, oracle: OracleState | None):
    """bytes -> truncated node digest bytes, as a tight closure."""
    spec = config.hash_spec()
    nb = spec.nbytes
    if config.oracle_kind == SHA256:
        sha = hashlib.sha256
        if spec.bits % 8 == 0:
            return lambda x: sha(x).digest()[:nb]
        mask = spec.last_byte_mask
        cut = nb - 1

        def node(x: bytes) -> bytes:
            d = sha(x).digest()
            return d[:cut] + bytes((d[cut] & mask,))

        return node
    value64 = oracle.value64
    bitmask = (1 << spec.bits) - 1
    pad = (8 - spec.bits % 8) % 8
    return lambda x: ((value64(x) & bitmask) << pad).to_bytes(nb, "big")


def run_experiment(config: ExperimentConfig, experiment_index: int) -> int:
    """Match count for one seeded batch of trials_per_experiment trials."""
    if not 0 <= experiment_index < config.num_experiments:
        raise ValueError(f"experiment_index {experiment_index} out of range")
    rng = np.random.default_rng(
        derive_cell_seed(config.master_seed, config.bits, config.path_len, experiment_index)
    )
    oracle = None
    if config.oracle_kind == IDEAL:
        oracle = OracleState(
            _derive_oracle_seed(
                config.master_seed, config.bits, config.path_len, experiment_index
            )
        )
    node = _node_fn(config, oracle)

    trials = config.trials_per_experiment
    m = config.path_len
    length = config.data_length
    width = config.sibling_nbytes
    mask_last = config.hash_spec().last_byte_mask if config.sibling_mode == TRUNCATED else 0xFF

    # Fixed draw order: path bytes, base data, substitute data, resamples.
    blob = rng.bytes(trials * m * width) if m else b""
    base_idx = rng.integers(0, len(ALPHABET), size=(trials, length), dtype=np.uint8)
    sub_idx = rng.integers(0, len(ALPHABET), size=(trials, length), dtype=np.uint8)
    for row in np.nonzero((base_idx == sub_idx).all(axis=1))[0]:
        while True:
            redraw = rng.integers(0, len(ALPHABET), size=length, dtype=np.uint8)
            if not np.array_equal(redraw, base_idx[row]):
                sub_idx[row] = redraw
                break

    base_data = _ALPHABET_CODES[base_idx]
    sub_data = _ALPHABET_CODES[sub_idx]

    matches = 0
    stride = m * width
    for t in range(trials):
        offset = t * stride
        if mask_last == 0xFF:
            sibs = [blob[offset + k * width : offset + (k + 1) * width] for k in range(m)]
        else:
            sibs = []
            for k in range(m):
                raw = blob[offset + k * width : offset + (k + 1) * width]
                sibs.append(raw[:-1] + bytes((raw[-1] & mask_last,)))
        cur = node(base_data[t].tobytes())
        for s in sibs:
            cur = node(cur + s)
        root = cur
        cur = node(sub_data[t].tobytes())
        for s in sibs:
            cur = node(cur + s)
        matches += cur == root
    return matches


def _finalize_cell(config: ExperimentConfig, matches: int) -> CellResult:
    total = config.total_trials
    exact = exact_falsification_prob(PathParams(config.bits, config.path_len)).value
    with mpmath.workdps(PRECISION_DPS):
        empirical = mpf(matches) / total
        std_error = mpmath.sqrt(exact * (1 - exact) / total)
        z = (empirical - exact) / std_error if std_error != 0 else mpf(0)
    return CellResult(
        config=config,
        matches=matches,
        total_trials=total,
        empirical_p=matches / total,
        exact_p=float(exact),
        std_error=float(std_error),
        z_score=float(z),
    )


def run_cell(config: ExperimentConfig) -> CellResult:
    matches = sum(
        run_experiment(config, k) for k in range(config.num_experiments)
    )
    return _finalize_cell(config, matches)


def _run_task(task: tuple[ExperimentConfig, int]) -> int:
    return run_experiment(*task)


def run_grid(configs: list[ExperimentConfig], workers: int = 1) -> SimulationReport:
    """Evaluate all cells; results are independent of worker count.

    Experiments fan out over a process pool when workers > 1; counts are
    merged back in (config, experiment_index) order.
    """
    if not configs:
        raise ValueError("run_grid needs at least one config")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    start = time.perf_counter()
    tasks = [(config, k) for config in configs for k in range(config.num_experiments)]
    if workers == 1:
        counts = [run_experiment(config, k) for config, k in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, len(tasks) // (4 * workers))
            counts = list(pool.map(_run_task, tasks, chunksize=chunk))
    cells = []
    at = 0
    for config in configs:
        matches = sum(counts[at : at + config.num_experiments])
        at += config.num_experiments
        cells.append(_finalize_cell(config, matches))
    return SimulationReport(
        cells=cells,
        master_seed=configs[0].master_seed,
        duration_seconds=time.perf_counter() - start,
    )


def build_grid(
    bits_list,
    path_lens,
    **common,
) -> list[ExperimentConfig]:
    """Configs for bits_list x path_lens, row-major, sharing common settings."""
    if not bits_list or not path_lens:
        raise ValueError("bits_list and path_lens must be non-empty")
    return [
        ExperimentConfig(bits=b, path_len=m, **common)
        for b in bits_list
        for m in path_lens
    ]
