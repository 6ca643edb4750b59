"""Size guards shared by the exact oracles."""
import logging
from typing import Optional

from config.schema import OracleLimits

from ..errors import OracleLimitError

logger = logging.getLogger(__name__)


def resolve_limits(limits: Optional[OracleLimits]) -> OracleLimits:
    return limits if limits is not None else OracleLimits()


def check_limit(limits: OracleLimits, name: str, size: int) -> None:
    """Raise OracleLimitError when ``size`` exceeds the named limit."""
    value = getattr(limits, name)
    if size > value:
        logger.error(f"Oracle limit {name}={value} exceeded by an input of size {size}")
        raise OracleLimitError(name, value, size)
