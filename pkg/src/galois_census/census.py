"""Exhaustive censuses over coefficient boxes.

A census enumerates every monic (or general, in non-monic mode) integer
polynomial of degree n with coefficients in [-H, H], classifies each one
exactly once, and tallies: counts per label, the non-S_n count E_n(H), the
intransitive (reducible) count and its Chela ratio, and a three-way case
decomposition of the certified primitive non-S_n population driven by
ramified-prime products and field discriminants.

Work is sharded lexicographically over leading-coefficient prefixes; shard
counters merge by addition, so reports are independent of the shard count and
of scheduling.  Interrupted runs persist a JSON checkpoint and resume to a
byte-identical report.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import tempfile
import time
import warnings
from dataclasses import dataclass, field, asdict

from . import _bulk, arith, galois
from .errors import BudgetExceededError, CheckpointMismatchError
from .galois import FieldDiscCertificate

CHECKPOINT_FORMAT_VERSION = 1
REPORT_FORMAT_VERSION = 1

CASE_I = "CASE_I"
CASE_II = "CASE_II"
CASE_III = "CASE_III"
NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class CensusConfig:
    """Parameters of one census run."""

    n: int
    H: int
    mode: str = "monic"  # "monic" | "non_monic"
    delta: float = 0.0
    prime_bound: int = 10_000
    shard_count: int = 1
    workers: int | None = None
    max_box: int = 20_000_000

    def __post_init__(self):
        if not 1 <= self.n <= 7:
            raise ValueError("degree must be in 1..7")
        if self.H < 0:
            raise ValueError("H must be nonnegative")
        if self.mode not in ("monic", "non_monic"):
            raise ValueError("mode must be monic or non_monic")
        if self.delta < 0:
            raise ValueError("delta must be >= 0")
        if self.delta and self.delta >= 1 / (2 * self.n - 1):
            raise ValueError(f"delta must be < 1/(2n-1) = {1/(2*self.n-1):.4f}")
        if self.shard_count < 1:
            raise ValueError("need at least one shard")

    @property
    def dims(self) -> int:
        return self.n + (1 if self.mode == "non_monic" else 0)

    @property
    def box_size(self) -> int:
        return (2 * self.H + 1) ** self.dims

    def check_budget(self):
        if self.box_size > self.max_box:
            raise BudgetExceededError(
                f"box has {self.box_size} polynomials, over budget {self.max_box}",
                estimate=self.box_size)

    def config_hash(self) -> str:
        key = json.dumps({
            "n": self.n, "H": self.H, "mode": self.mode, "delta": self.delta,
            "prime_bound": self.prime_bound, "shard_count": self.shard_count,
        }, sort_keys=True)
        return hashlib.sha256(key.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class CaseLabel:
    """Which regime a certified primitive non-S_n polynomial falls in.

    CASE_II: field discriminant D <= H^{2+2delta}; else CASE_III: ramified
    product C > H^{1+delta}; else CASE_I.  The three cases partition all
    (D, C); precedence II, III, I keeps overlapping definitions disjoint.
    For CASE_III, A is the product of the prime divisors of C exceeding
    H^{delta/2} and picks subcase i (A <= H) or ii (A > H).
    """

    case: str
    subcase: str | None = None
    A: int | None = None


def case_decompose(cert: FieldDiscCertificate, H: int, delta: float) -> CaseLabel:
    """Assign the case label; partial certificates are NOT_APPLICABLE."""
    if not cert.is_exact:
        return CaseLabel(NOT_APPLICABLE)
    D, C = cert.D, cert.C
    if delta == 0:
        d_small = D <= H * H
        c_small = C <= H
    else:
        d_small = D <= H ** (2 + 2 * delta)
        c_small = C <= H ** (1 + delta)
    if d_small:
        return CaseLabel(CASE_II)
    if not c_small:
        threshold = H ** (delta / 2)
        A = 1
        for p, _ in arith.factorize(C):
            if p > threshold:
                A *= p
        return CaseLabel(CASE_III, "i" if A <= H else "ii", A)
    return CaseLabel(CASE_I)


# ----------------------------------------------------------------------------
# sharding
# ----------------------------------------------------------------------------

def _prefix_dims(config: CensusConfig) -> int:
    return (config.dims + 1) // 2


def _shard_ranges(config: CensusConfig) -> list[tuple[int, int]]:
    side = 2 * config.H + 1
    total = side ** _prefix_dims(config)
    count = min(config.shard_count, total)
    base, extra = divmod(total, count)
    out = []
    start = 0
    for i in range(count):
        size = base + (1 if i < extra else 0)
        out.append((start, start + size))
        start += size
    return out


def _decode_prefix(index: int, m: int, H: int) -> tuple[int, ...]:
    side = 2 * H + 1
    digits = []
    for _ in range(m):
        digits.append(index % side - H)
        index //= side
    return tuple(reversed(digits))


def _scan_shard(config: CensusConfig, shard_id: int) -> dict[str, int]:
    """Classify one shard and tally labels, cases and certificates."""
    lo, hi = _shard_ranges(config)[shard_id]
    m = _prefix_dims(config)
    prefixes = [_decode_prefix(i, m, config.H) for i in range(lo, hi)]
    labels, specials = _bulk.scan_prefixes(
        config.n, config.H, config.mode, prefixes, config.prime_bound)
    counters: dict[str, int] = {}
    for key, cnt in labels.items():
        counters["label:" + key] = counters.get("label:" + key, 0) + cnt
    for coeffs in specials:
        _tally_certificate(counters, config, coeffs)
    return counters


def _tally_certificate(counters: dict[str, int], config: CensusConfig,
                       coeffs: tuple[int, ...]):
    from .intpoly import MonicIntPoly
    f = MonicIntPoly(config.n, coeffs)
    cert = galois.field_disc_certificate(f)
    if not cert.is_exact:
        counters["excluded_partial"] = counters.get("excluded_partial", 0) + 1
        return
    counters["case_pop"] = counters.get("case_pop", 0) + 1
    if not arith.is_squarefull(cert.D):
        counters["squarefull_violations"] = counters.get("squarefull_violations", 0) + 1
    label = case_decompose(cert, config.H, config.delta)
    counters["case:" + label.case] = counters.get("case:" + label.case, 0) + 1
    if label.subcase:
        counters["subcase:" + label.subcase] = \
            counters.get("subcase:" + label.subcase, 0) + 1


def _merge(into: dict[str, int], other: dict[str, int]):
    for k, v in other.items():
        into[k] = into.get(k, 0) + v


# ----------------------------------------------------------------------------
# report
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class CensusReport:
    """Deterministic census summary; independent of sharding and scheduling."""

    config: CensusConfig
    total: int
    label_counts: tuple[tuple[str, str, int], ...]  # (group_name, certainty, count)
    e_n: int
    e_n_upper: int
    sn_certified: int
    undecided: int
    intransitive: int
    chela_ratio: float
    case_counts: tuple[tuple[str, int], ...]
    subcase_counts: tuple[tuple[str, int], ...]
    case_population: int
    excluded_partial: int
    squarefull_violations: int
    wall_time: float = field(compare=False, default=0.0)

    def counters_digest(self) -> str:
        payload = json.dumps([self.label_counts, self.case_counts,
                              self.subcase_counts, self.total], sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def to_csv(self) -> str:
        c = self.config
        lines = [
            f"# galois-census report format={REPORT_FORMAT_VERSION}",
            f"# config: n={c.n} H={c.H} mode={c.mode} delta={c.delta:g} "
            f"prime_bound={c.prime_bound}",
            "kind,key,certainty,count",
        ]
        for name, certainty, count in self.label_counts:
            lines.append(f"label,{name},{certainty},{count}")
        for case, count in self.case_counts:
            lines.append(f"case,{case},,{count}")
        for sub, count in self.subcase_counts:
            lines.append(f"subcase,{sub},,{count}")
        for key, val in [
            ("total", self.total), ("e_n", self.e_n), ("e_n_upper", self.e_n_upper),
            ("sn_certified", self.sn_certified), ("undecided", self.undecided),
            ("intransitive", self.intransitive),
            ("case_population", self.case_population),
            ("excluded_partial", self.excluded_partial),
            ("squarefull_violations", self.squarefull_violations),
        ]:
            lines.append(f"summary,{key},,{val}")
        lines.append(f"summary,chela_ratio,,{self.chela_ratio:.10g}")
        lines.append(f"summary,counters_digest,,{self.counters_digest()}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        c = self.config
        out = [
            f"census n={c.n} H={c.H} mode={c.mode} delta={c.delta:g}",
            f"  total polynomials : {self.total}",
            f"  E_n(H)            : {self.e_n}"
            + (f"  (interval [{self.e_n}, {self.e_n_upper}])"
               if self.undecided else ""),
            f"  certified S_n     : {self.sn_certified}",
            f"  undecided         : {self.undecided}",
            f"  intransitive      : {self.intransitive}"
            f"  (Chela ratio {self.chela_ratio:.6g})",
            f"  case population   : {self.case_population}"
            f"  (excluded partial: {self.excluded_partial})",
        ]
        for case, count in self.case_counts:
            out.append(f"    {case:9s} : {count}")
        for sub, count in self.subcase_counts:
            out.append(f"    subcase {sub} : {count}")
        if self.squarefull_violations:
            out.append(f"  SQUAREFULL VIOLATIONS: {self.squarefull_violations}")
        out.append(f"# wall time {self.wall_time:.2f}s")
        return "\n".join(out) + "\n"


def _report_from_counters(config: CensusConfig, counters: dict[str, int],
                          wall_time: float) -> CensusReport:
    labels = []
    e_n = sn = undecided = intransitive = 0
    for key, count in counters.items():
        if not key.startswith("label:"):
            continue
        name, certainty, counts_as = key[len("label:"):].split("|")
        labels.append((name, certainty, count))
        if counts_as == galois.SN:
            sn += count
        elif counts_as == galois.NON_SN:
            e_n += count
        else:
            undecided += count
        if name.startswith("shape:") or name == "degenerate":
            intransitive += count
    labels.sort()
    total = config.box_size
    tallied = sum(c for _, _, c in labels)
    assert tallied == total, f"counted {tallied} != box {total}"
    chela = intransitive / config.H ** (config.n - 1) if config.H else float(intransitive)
    cases = tuple((c, counters.get("case:" + c, 0))
                  for c in (CASE_I, CASE_II, CASE_III, NOT_APPLICABLE))
    subs = tuple((s, counters.get("subcase:" + s, 0)) for s in ("i", "ii"))
    return CensusReport(
        config=config,
        total=total,
        label_counts=tuple(labels),
        e_n=e_n,
        e_n_upper=e_n + undecided,
        sn_certified=sn,
        undecided=undecided,
        intransitive=intransitive,
        chela_ratio=chela,
        case_counts=cases,
        subcase_counts=subs,
        case_population=counters.get("case_pop", 0),
        excluded_partial=counters.get("excluded_partial", 0),
        squarefull_violations=counters.get("squarefull_violations", 0),
        wall_time=wall_time,
    )


# ----------------------------------------------------------------------------
# checkpointing
# ----------------------------------------------------------------------------

def atomic_write(path: str, data: str):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_checkpoint(path: str, config: CensusConfig, completed: set[int],
                    counters: dict[str, int], shard_digests: dict[str, str]):
    payload = {
        "format_version": CHECKPOINT_FORMAT_VERSION,
        "config_hash": config.config_hash(),
        "completed_shard_ids": sorted(completed),
        "partial_counters": dict(sorted(counters.items())),
        "shard_digests": dict(sorted(shard_digests.items())),
    }
    atomic_write(path, json.dumps(payload, indent=1, sort_keys=True) + "\n")


def load_checkpoint(path: str, config: CensusConfig):
    with open(path) as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CheckpointMismatchError(f"corrupt checkpoint {path}: {exc}")
    if payload.get("format_version") != CHECKPOINT_FORMAT_VERSION:
        raise CheckpointMismatchError("unknown checkpoint format version")
    if payload.get("config_hash") != config.config_hash():
        raise CheckpointMismatchError(
            "checkpoint was written by a different configuration")
    return (set(payload["completed_shard_ids"]),
            {str(k): int(v) for k, v in payload["partial_counters"].items()},
            {str(k): str(v) for k, v in payload.get("shard_digests", {}).items()})


def _digest_counters(counters: dict[str, int]) -> str:
    return hashlib.sha256(
        json.dumps(dict(sorted(counters.items()))).encode()).hexdigest()[:16]


# ----------------------------------------------------------------------------
# the census driver
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class CensusRun:
    complete: bool
    report: CensusReport | None
    shards_done: int
    shards_total: int


def _worker(args):
    config_kwargs, shard_id = args
    counters = _scan_shard(CensusConfig(**config_kwargs), shard_id)
    return shard_id, counters


def enumerate_census(config: CensusConfig, checkpoint_path: str | None = None,
                     resume: bool = False,
                     max_shards_this_run: int | None = None) -> CensusRun:
    """Run (or resume) a census.  Returns a complete report, or a partial
    status with a checkpoint written when max_shards_this_run caps the run."""
    config.check_budget()
    t0 = time.time()
    shards = _shard_ranges(config)
    completed: set[int] = set()
    counters: dict[str, int] = {}
    digests: dict[str, str] = {}
    if resume:
        if not checkpoint_path or not os.path.exists(checkpoint_path):
            raise CheckpointMismatchError("resume requested but no checkpoint found")
        completed, counters, digests = load_checkpoint(checkpoint_path, config)

    todo = [i for i in range(len(shards)) if i not in completed]
    if max_shards_this_run is not None:
        todo = todo[:max_shards_this_run]

    workers = config.workers
    env = os.environ.get("GALOIS_CENSUS_THREADS")
    if env:
        workers = max(1, int(env))
    if workers is None:
        workers = 1

    cfg_kwargs = asdict(config)
    if workers > 1 and len(todo) > 1:
        import multiprocessing as mp
        with mp.get_context("fork").Pool(min(workers, len(todo))) as pool:
            for shard_id, shard_counters in pool.imap_unordered(
                    _worker, [(cfg_kwargs, i) for i in todo]):
                _merge(counters, shard_counters)
                completed.add(shard_id)
                digests[str(shard_id)] = _digest_counters(shard_counters)
                if checkpoint_path:
                    save_checkpoint(checkpoint_path, config, completed,
                                    counters, digests)
    else:
        for shard_id in todo:
            shard_counters = _scan_shard(config, shard_id)
            _merge(counters, shard_counters)
            completed.add(shard_id)
            digests[str(shard_id)] = _digest_counters(shard_counters)
            if checkpoint_path:
                save_checkpoint(checkpoint_path, config, completed, counters,
                                digests)

    if len(completed) < len(shards):
        return CensusRun(complete=False, report=None,
                         shards_done=len(completed), shards_total=len(shards))
    report = _report_from_counters(config, counters, time.time() - t0)
    if checkpoint_path and os.path.exists(checkpoint_path):
        os.unlink(checkpoint_path)
    return CensusRun(complete=True, report=report,
                     shards_done=len(completed), shards_total=len(shards))


# ----------------------------------------------------------------------------
# growth exponent fitting
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class ExponentFit:
    slope: float
    intercept: float
    residuals: tuple[float, ...]


def fit_exponent(series: list[tuple[int, int]]) -> ExponentFit:
    """Least-squares slope of log(count) against log(H).

    Points with nonpositive counts are dropped with a warning; at least three
    usable points are required.
    """
    usable = []
    for H, count in series:
        if count <= 0:
            warnings.warn(f"dropping nonpositive count at H={H}")
            continue
        usable.append((math.log(H), math.log(count)))
    if len(usable) < 3:
        raise ValueError("need at least 3 usable points to fit an exponent")
    n = len(usable)
    sx = sum(x for x, _ in usable)
    sy = sum(y for _, y in usable)
    sxx = sum(x * x for x, _ in usable)
    sxy = sum(x * y for x, y in usable)
    denom = n * sxx - sx * sx
    slope = (n * sxy - sx * sy) / denom
    intercept = (sy - slope * sx) / n
    residuals = tuple(y - (slope * x + intercept) for x, y in usable)
    return ExponentFit(slope=slope, intercept=intercept, residuals=residuals)
