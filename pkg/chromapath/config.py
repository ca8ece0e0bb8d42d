# chromapath/config.py — environment-driven settings (.env supported)
# Values resolve once at import; CLI flags override them per invocation.

from __future__ import annotations
import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

SEED = int(os.environ.get("CHROMAPATH_SEED", "42"))
ART_DIR = Path(os.environ.get("CHROMAPATH_ARTIFACTS", "artifacts"))
JOBS = max(1, int(os.environ.get("CHROMAPATH_JOBS", "1")))

MAX_TOURNAMENT_ORDER = 7
MAX_ORIENTED_ORDER = 5
MAX_SCAN_ORDER = 12

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def resolve_seed(explicit: Optional[int] = None) -> int:
    return SEED if explicit is None else int(explicit)


def resolve_jobs(explicit: Optional[int] = None) -> int:
    return JOBS if explicit is None else max(1, int(explicit))


def configure_logging(verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
    )
