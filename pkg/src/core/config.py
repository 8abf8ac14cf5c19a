from dataclasses import dataclass
from typing import Optional
import os
from pathlib import Path

import yaml
from dotenv import load_dotenv

from src.core.constants import (
    DEFAULT_MAX_LEN, DEFAULT_PUNCTURES, DEFAULT_SEED, DEFAULT_TRIALS,
    DEFAULT_EXPANSION_DEGREE, OutputFormat
)
from src.core.exceptions import ConfigurationError


@dataclass
class RunConfig:
    punctures: int = DEFAULT_PUNCTURES
    degree: int = DEFAULT_EXPANSION_DEGREE
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    max_len: int = DEFAULT_MAX_LEN
    output_format: OutputFormat = OutputFormat.TEXT

    def __post_init__(self):
        if isinstance(self.output_format, str):
            self.output_format = OutputFormat(self.output_format)
        if self.punctures < 1:
            raise ConfigurationError(f"punctures must be >= 1, got {self.punctures}")
        if self.degree < 1:
            raise ConfigurationError(f"degree must be >= 1, got {self.degree}")
        if self.trials < 0 or self.max_len < 0:
            raise ConfigurationError("trials and max_len must be non-negative")


@dataclass
class ParallelConfig:
    max_parallelism: int = 1
    chunk_size: int = 64


@dataclass
class LoggingConfig:
    level: str = "WARNING"
    format: str = "colored"
    file: Optional[str] = None


class Config:
    def __init__(self, env: Optional[str] = None, config_dir: str = "config"):
        load_dotenv()
        self.env = env or os.getenv("GT_ENV", "development")
        self.config_dir = Path(config_dir)
        self._load_config()

    def _load_config(self):
        data = self._read_profile()

        run = dict(data.get("run", {}))
        if os.getenv("GT_SEED"):
            run["seed"] = int(os.environ["GT_SEED"])
        if os.getenv("GT_DEGREE"):
            run["degree"] = int(os.environ["GT_DEGREE"])
        self.run = RunConfig(**run)

        parallel = dict(data.get("parallel", {}))
        if os.getenv("GT_MAX_PARALLELISM"):
            parallel["max_parallelism"] = int(os.environ["GT_MAX_PARALLELISM"])
        self.parallel = ParallelConfig(**parallel)
        if self.parallel.max_parallelism < 1:
            raise ConfigurationError("GT_MAX_PARALLELISM must be >= 1")

        logging_data = dict(data.get("logging", {}))
        if os.getenv("GT_LOG_LEVEL"):
            logging_data["level"] = os.environ["GT_LOG_LEVEL"]
        self.logging = LoggingConfig(**logging_data)

    def _read_profile(self) -> dict:
        config_path = self.config_dir / f"{self.env}.yaml"
        if not config_path.exists():
            return {}
        try:
            with open(config_path) as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Malformed profile {config_path}: {e}")
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ConfigurationError(f"Profile {config_path} must be a mapping")
        return data

    def with_overrides(self, **overrides) -> RunConfig:
        """Return a RunConfig with non-None overrides applied"""
        values = {
            'punctures': self.run.punctures,
            'degree': self.run.degree,
            'seed': self.run.seed,
            'trials': self.run.trials,
            'max_len': self.run.max_len,
            'output_format': self.run.output_format,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return RunConfig(**values)
