import os.path
import configparser
import logging
from dataclasses import dataclass, replace
from typing import Optional

from helpers.errors import ConfigurationError

logger = logging.getLogger(__name__)

SECTION = "engine"

DEFAULTS = {
    "algebra": "R",
    "involution": "default",
    "sigma": "0",
    "d": "1",
    "form": "osp(1,0|0)",
    "field": "rational",
    "log_level": "INFO",
    "max_unknowns": "100000",
}


class Config:
    def __init__(self, config_file='config.ini'):
        self.config_file = config_file
        self.config = configparser.ConfigParser()
        if os.path.exists(self.config_file):
            self.config.read(self.config_file)
        else:
            self._create_default_config()

    def _create_default_config(self):
        self.config[SECTION] = dict(DEFAULTS)
        try:
            with open(self.config_file, 'w') as configfile:
                self.config.write(configfile)
        except OSError as e:
            logger.warning(f"Could not write default config {self.config_file}: {e}")

    def get(self, section, option):
        if self.config.has_option(section, option):
            return self.config.get(section, option)
        return DEFAULTS[option]


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a command needs to build its algebra, category and form.

    Values come from the config file and may be overridden by command-line flags.
    Consistency with the category rules is checked by `validate`.
    """

    algebra: str = "R"
    involution: str = "default"
    sigma: int = 0
    d: str = "1"
    form: str = "osp(1,0|0)"
    field: str = "rational"
    log_level: str = "INFO"
    max_unknowns: int = 100000

    @classmethod
    def load(cls, config_file: str = "config.ini", **overrides) -> "RunConfig":
        """
        Reads the config file and applies the non-None overrides.

        Args:
            config_file (str): Path of the `key = value` file.
            **overrides: Flag values; None means "not given".

        Returns:
            RunConfig: The validated configuration.
        """
        config = Config(config_file)
        values = {
            "algebra": config.get(SECTION, "algebra"),
            "involution": config.get(SECTION, "involution"),
            "sigma": int(config.get(SECTION, "sigma")),
            "d": config.get(SECTION, "d"),
            "form": config.get(SECTION, "form"),
            "field": config.get(SECTION, "field"),
            "log_level": config.get(SECTION, "log_level"),
            "max_unknowns": int(config.get(SECTION, "max_unknowns")),
        }
        run_config = cls(**values)
        given = {key: value for key, value in overrides.items() if value is not None}
        if given:
            run_config = replace(run_config, **given)
        run_config.validate()
        logger.debug(f"Loaded run configuration {run_config}")
        return run_config

    def validate(self) -> None:
        if self.sigma not in (0, 1):
            raise ConfigurationError(f"sigma must be 0 or 1, got {self.sigma}")
        if self.involution not in ("default", "id"):
            raise ConfigurationError(f"unknown involution variant {self.involution!r}")
        if self.field not in ("rational", "gaussian"):
            raise ConfigurationError(f"unknown field {self.field!r}")
        if self.max_unknowns <= 0:
            raise ConfigurationError("max_unknowns must be positive")
        if not isinstance(logging.getLevelName(self.log_level.upper()), int):
            raise ConfigurationError(f"unknown log level {self.log_level!r}")

    def algebra_name(self) -> str:
        """Catalog name after applying the involution variant and the field choice."""
        name = self.algebra
        if self.involution == "id" and name in ("C", "C_real"):
            return "C_real_id"
        if name == "C":
            return "C_cplx" if self.field == "gaussian" else "C_real"
        return name

    def form_name(self, override: Optional[str] = None) -> str:
        return override if override else self.form
