"""
@file: __init__.py
@description: Командная строка MutVis
"""

from .app import MutvisCli, main

__all__ = ["MutvisCli", "main"]
