"""Chained Bell experiment simulator and analysis toolkit."""

from bellchain._bellchain import *  # noqa: F401,F403
from bellchain._bellchain import __doc__  # noqa: F401

__version__ = "0.1.0"
