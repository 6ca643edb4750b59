from pathlib import Path
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from app.core.generators import GraphFactory

OutputFormat = Literal["json", "dot", "summary"]


class OracleLimits(BaseModel):
    """Size limits for the exact oracles."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    max_pw_vertices: int = Field(
        default=18,
        gt=0,
        description="Largest graph accepted by the exact pathwidth oracle",
    )
    max_lpw_vertices: int = Field(
        default=7,
        gt=0,
        description="Largest graph accepted by the exact layered pathwidth oracle",
    )
    max_minor_host: int = Field(
        default=14,
        gt=0,
        description="Largest host graph accepted by the minor search",
    )
    max_minor_pattern: int = Field(
        default=6,
        gt=0,
        description="Largest pattern graph accepted by the minor search",
    )


class LimitsSettings(BaseSettings):
    """Oracle limits taken from the environment.

    ``LAYERED_DECOMP_LIMITS`` holds a JSON object with any subset of the
    :class:`OracleLimits` fields; a ``.env`` file in the working directory is
    read as well.
    """

    model_config = SettingsConfigDict(
        env_prefix="LAYERED_DECOMP_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    limits: Optional[Dict[str, int]] = None


class GeneratorSpec(BaseModel):
    """A named family with its integer parameters."""

    family: str
    params: tuple = ()

    @field_validator("family")
    @classmethod
    def validate_family(cls, v: str) -> str:
        """Normalize the family name."""
        return GraphFactory.resolve(v)

    @model_validator(mode="after")
    def validate_arity(self) -> "GeneratorSpec":
        arity = GraphFactory.arity(self.family)
        if len(self.params) != arity:
            raise ValueError(f"{self.family} takes {arity} parameter(s), got {len(self.params)}")
        return self


class RunConfig(BaseModel):
    """Validated options of a single CLI invocation."""

    command: str = Field(..., min_length=1, description="Subcommand name")
    input_path: Optional[Path] = Field(default=None, description="Edge-list input file")
    generator: Optional[GeneratorSpec] = Field(default=None, description="Generator input")
    seed: Optional[int] = Field(default=None, description="Seed for randomized generators")
    limits: OracleLimits = Field(default_factory=OracleLimits, description="Oracle limits")
    root: Optional[int] = Field(default=None, ge=0, description="bfs root override")
    format: OutputFormat = Field(default="json", description="Output format")
    out: Optional[Path] = Field(default=None, description="Output path; stdout when unset")

    @model_validator(mode="after")
    def validate_input_source(self) -> "RunConfig":
        """Exactly one input source; seeds for randomized generators."""
        if (self.input_path is None) == (self.generator is None):
            raise ValueError("Exactly one of an input file or a generator spec is required")
        if self.generator is not None:
            if GraphFactory.is_randomized(self.generator.family) and self.seed is None:
                raise ValueError(f"--seed is required for the randomized family {self.generator.family}")
        return self


def validate_limits(data: Dict[str, Any]) -> Optional[str]:
    """Validate a limits mapping.

    Args:
        data: Mapping with any subset of the limit fields

    Returns:
        Error message if validation fails, None if successful
    """
    try:
        OracleLimits(**data)
        return None
    except ValidationError as e:
        return str(e)
