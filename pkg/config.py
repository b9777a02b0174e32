import os
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from dotenv import load_dotenv

from errors import BadParam

# Configure logging
logger = logging.getLogger(__name__)

load_dotenv()


def _env_int(name: str, default: int) -> int:
    """Read a positive integer default from the environment"""
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}, using {default}")
        return default


DEFAULT_MAX_VERTICES = _env_int("POSETCM_MAX_VERTICES", 40)
DEFAULT_MAX_HOMOLOGY_VERTICES = _env_int("POSETCM_MAX_HOMOLOGY_VERTICES", 20)
DEFAULT_MAX_SEARCH_NODES = _env_int("POSETCM_MAX_SEARCH_NODES", 1_000_000)
DEFAULT_WORKERS = _env_int("POSETCM_WORKERS", 1)

DIALECTS = ("m2", "singular")


@dataclass
class RunConfig:
    """Settings for one CLI invocation"""
    subcommand: str = ""
    inputs: List[str] = field(default_factory=list)
    dialect: str = "m2"
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_homology_vertices: int = DEFAULT_MAX_HOMOLOGY_VERTICES
    max_search_nodes: int = DEFAULT_MAX_SEARCH_NODES
    workers: int = DEFAULT_WORKERS
    verbose: bool = False
    output: Optional[str] = None

    def __post_init__(self):
        for name in ("max_vertices", "max_homology_vertices", "max_search_nodes"):
            if getattr(self, name) <= 0:
                raise BadParam(f"{name} must be positive, got {getattr(self, name)}")
        if self.workers < 1:
            raise BadParam(f"workers must be at least 1, got {self.workers}")
        if self.dialect not in DIALECTS:
            raise BadParam(f"unknown dialect {self.dialect!r}")
