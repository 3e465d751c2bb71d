"""
RunConfig module
"""

import os

import yaml

from ..remesh import RemeshParams
from ..shell import LoadCase, Material, ShellSection
from ..version import __schema__
from .errors import ConfigError


class RunConfig:
    """
    Validated run configuration. Configurations are YAML or JSON documents, unknown keys are rejected.
    """

    # Top-level keys and defaults
    DEFAULTS = {
        "version": __schema__,
        "mesh": None,
        "weld": 1e-5,
        "remesh": None,
        "pressure": {"value": 100.0, "unit": "mmHg"},
        "section": {"thickness": 0.086, "reference": "inner", "points": 5},
        "material": {"youngs": 100000.0, "poisson": 0.49},
        "clamp": {"policy": "auto", "vertices": []},
        "solver": {"method": "direct", "tolerance": 1e-9, "threads": 1},
        "output": "output",
        "deterministic": False,
        "flip": False,
        "ranks": {"min": 5},
    }

    # Allowed keys of nested sections
    SECTIONS = {
        "remesh": {"size", "iterations", "projection"},
        "pressure": {"value", "unit"},
        "section": {"thickness", "reference", "points"},
        "material": {"youngs", "poisson"},
        "clamp": {"policy", "vertices"},
        "solver": {"method", "tolerance", "threads", "backend", "maxiter"},
        "ranks": {"min"},
    }

    @staticmethod
    def read(data):
        """
        Reads a YAML or JSON configuration.

        Args:
            data: file path, inline document or dictionary

        Returns:
            dict
        """

        if isinstance(data, str):
            if os.path.exists(data):
                with open(data, "r", encoding="utf-8") as f:
                    return yaml.safe_load(f)

            try:
                data = yaml.safe_load(data)
            except yaml.YAMLError as e:
                raise ConfigError(f"Unable to parse configuration: {e}") from e

            if not isinstance(data, dict):
                raise FileNotFoundError(f"Unable to load file '{data}'")

        return data

    def __init__(self, config=None):
        """
        Creates a new RunConfig.

        Args:
            config: file path, inline document or dictionary
        """

        config = RunConfig.read(config) if config is not None else {}
        if not isinstance(config, dict):
            raise ConfigError("Configuration must be a mapping")

        self.config = self.validate(config)

    def __getitem__(self, key):
        return self.config[key]

    def __repr__(self):
        return f"RunConfig({self.config})"

    def validate(self, config):
        """
        Checks keys and values and fills in defaults.

        Args:
            config: configuration dictionary

        Returns:
            validated configuration dictionary
        """

        unknown = set(config) - set(RunConfig.DEFAULTS)
        if unknown:
            raise ConfigError(f"Unknown configuration key(s): {sorted(unknown)}")

        if config.get("version", __schema__) != __schema__:
            raise ConfigError(f"Unsupported configuration version {config['version']}, expected {__schema__}")

        if "pressure" in config and (not isinstance(config["pressure"], dict) or "unit" not in config["pressure"]):
            raise ConfigError("Pressure requires a unit tag: mmHg, kPa or MPa")

        merged = {}
        for key, default in RunConfig.DEFAULTS.items():
            value = config.get(key)
            if key in RunConfig.SECTIONS and value is not None:
                if not isinstance(value, dict):
                    raise ConfigError(f"Configuration key '{key}' must be a mapping")

                unknown = set(value) - RunConfig.SECTIONS[key]
                if unknown:
                    raise ConfigError(f"Unknown '{key}' key(s): {sorted(unknown)}")

                value = {**default, **value} if default else dict(value)

            merged[key] = default if value is None else value

        mesh = merged["mesh"]
        if mesh is not None and not isinstance(mesh, (str, dict)):
            raise ConfigError("Configuration key 'mesh' must be a path or a benchmark mapping")
        if isinstance(mesh, dict) and "benchmark" not in mesh:
            raise ConfigError("Benchmark mesh configuration requires a 'benchmark' name")

        if merged["remesh"] is not None and "size" not in merged["remesh"]:
            raise ConfigError("Remesh configuration requires a target 'size'")

        try:
            merged["weld"] = float(merged["weld"])
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Weld tolerance must be a number, found {merged['weld']}") from e

        if merged["weld"] <= 0:
            raise ConfigError(f"Weld tolerance must be positive, found {merged['weld']}")

        if int(merged["solver"]["threads"]) < 1:
            raise ConfigError(f"Solver threads must be >= 1, found {merged['solver']['threads']}")

        # Build physical objects to validate their values
        self.config = merged
        try:
            self.material(), self.section(), self.load(), self.remesh()
        except (TypeError, ValueError) as e:
            raise ConfigError(str(e)) from e

        return merged

    def update(self, **kwargs):
        """
        Creates a copy of this configuration with overrides applied. Supported overrides: output, flip, deterministic,
        threads, mesh and pressure as a (value, unit) pair. None values are ignored.

        Args:
            kwargs: overrides

        Returns:
            RunConfig
        """

        config = {key: (dict(value) if isinstance(value, dict) else value) for key, value in self.config.items()}
        for key, value in kwargs.items():
            if value is None:
                continue

            if key == "threads":
                config["solver"]["threads"] = value
            elif key == "pressure":
                config["pressure"] = {"value": value[0], "unit": value[1]}
            elif key in ("output", "flip", "deterministic", "mesh"):
                config[key] = value
            else:
                raise ConfigError(f"Unknown configuration override '{key}'")

        return RunConfig(config)

    def material(self):
        """
        Builds the material.

        Returns:
            Material
        """

        return Material(**self.config["material"])

    def section(self):
        """
        Builds the shell section.

        Returns:
            ShellSection
        """

        return ShellSection(**self.config["section"])

    def load(self):
        """
        Builds the pressure load case.

        Returns:
            LoadCase
        """

        return LoadCase(**self.config["pressure"])

    def remesh(self, size=None):
        """
        Builds remeshing parameters.

        Args:
            size: optional target size, overrides the configuration

        Returns:
            RemeshParams or None when no remeshing is configured
        """

        remesh = self.config["remesh"] or {}
        size = size if size is not None else remesh.get("size")
        if size is None:
            return None

        return RemeshParams(size, remesh.get("iterations", 10), remesh.get("projection", True))
