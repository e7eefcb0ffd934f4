"""glucolog: self-hosted diabetes self-monitoring service."""

__version__ = "0.1.0"
