"""
Sadic Controllers
Command line surface
"""
from sadic.controllers.cli import cli, main

__all__ = ['cli', 'main']
