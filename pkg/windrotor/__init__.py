"""HAWT rotor performance and design toolkit"""

__version__ = "0.1.0"
