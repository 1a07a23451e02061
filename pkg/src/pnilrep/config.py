"""
Run configuration: defaults, YAML files, command-line flags and environment.
"""

import logging
import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import yaml

from .duals import DEFAULT_DUAL_CAP
from .groups import DEFAULT_QUOTIENT_CAP, LAW_IDS, GroupLaw, law_for
from .integrals import DEFAULT_ORACLE_CAP
from .models import OutputFormat

logger = logging.getLogger(__name__)

THREADS_ENV = "PNILREP_THREADS"
DEFAULT_SAMPLES = 100


def default_threads() -> int:
    return os.cpu_count() or 1


@dataclass(frozen=True)
class RunConfig:
    """
    Parameters of one command.

    Attributes:
        group: Law id (zp, h1, h2, b4, g52 … g56)
        dim: Dimension of ℤ_p^d when group is zp
        prime: The prime p
        level: Ball level n
        alpha: Operator order α
        seed: Seed of the randomized property samples
        output_format: console, json or csv
        samples: Random draws per property
        labels: Sampled labels per check at level ≥ 2
        threads: Worker processes for per-label checks
        dual_cap: Cap on Σ d² of enumerated balls
        quotient_cap: Cap on enumerated quotients
        oracle_cap: Cap on Riemann-sum evaluations
    """
    group: str = "h1"
    dim: int = 1
    prime: int = 3
    level: int = 1
    alpha: float = 1.0
    seed: int = 0
    output_format: OutputFormat = OutputFormat.CONSOLE
    samples: int = DEFAULT_SAMPLES
    labels: int = 20
    threads: int = 1
    dual_cap: int = DEFAULT_DUAL_CAP
    quotient_cap: int = DEFAULT_QUOTIENT_CAP
    oracle_cap: int = DEFAULT_ORACLE_CAP

    def __post_init__(self) -> None:
        if self.group not in LAW_IDS:
            raise ValueError(f"Unknown group {self.group!r}; expected one of {', '.join(LAW_IDS)}")
        if self.dim < 1:
            raise ValueError(f"Dimension must be positive, got {self.dim}")
        self.law.check_prime(self.prime)
        if self.level < 0:
            raise ValueError(f"Level must be non-negative, got {self.level}")
        if not self.alpha > 0:
            raise ValueError(f"Alpha must be positive, got {self.alpha}")
        if self.samples < 0 or self.labels < 0:
            raise ValueError("Sample counts must be non-negative")
        if self.threads < 1:
            raise ValueError(f"Thread count must be positive, got {self.threads}")
        for name in ("dual_cap", "quotient_cap", "oracle_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    @property
    def law(self) -> GroupLaw:
        return law_for(self.group, self.dim)


CONFIG_KEYS = frozenset(f.name for f in fields(RunConfig))


def load_config(path: Path) -> Dict[str, Any]:
    """
    Read a YAML mapping of RunConfig fields.

    Raises:
        FileNotFoundError: If the file does not exist
        ValueError: If the document is not a mapping of known keys
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ValueError(f"Failed to parse {path}: {e}") from None
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ValueError(f"{path} must contain a mapping, got {type(data).__name__}")
    data = {str(k).replace("-", "_"): v for k, v in data.items()}
    if "format" in data:
        data["output_format"] = data.pop("format")
    unknown = sorted(set(data) - CONFIG_KEYS)
    if unknown:
        raise ValueError(f"Unknown config keys in {path}: {', '.join(unknown)}")
    logger.debug(f"Loaded {len(data)} settings from {path}")
    return data


def build_config(
    overrides: Mapping[str, Any],
    file_values: Optional[Mapping[str, Any]] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """
    Merge defaults, file values, flags and the environment into a RunConfig.

    Flags left as None keep the file value; PNILREP_THREADS wins over both.

    Raises:
        ValueError: If a merged value is invalid
    """
    values: Dict[str, Any] = {"threads": default_threads()}
    values.update(file_values or {})
    values.update({k: v for k, v in overrides.items() if v is not None})
    environ = os.environ if environ is None else environ
    if environ.get(THREADS_ENV):
        try:
            values["threads"] = int(environ[THREADS_ENV])
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {environ[THREADS_ENV]!r}") from None
    if "output_format" in values and not isinstance(values["output_format"], OutputFormat):
        values["output_format"] = OutputFormat(values["output_format"])
    if "alpha" in values:
        values["alpha"] = float(values["alpha"])
    return RunConfig(**values)
