"""Version-aware topic and sentiment analytics for app store reviews."""

__version__ = "0.1.0"
