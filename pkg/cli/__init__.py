from cli.app import cli

__all__ = ['cli']
