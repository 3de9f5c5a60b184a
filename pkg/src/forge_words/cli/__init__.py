"""
CLI - argparse front end for the forge-words experiments.
"""
from forge_words.cli.main import build_parser, main

__all__ = ["build_parser", "main"]
