"""
Main Application Entry Point - conjgen command line
"""
import logging
import sys

from infrastructure.config.environment.env_loader import EnvironmentLoader

# Logs go to stderr; stdout carries command output only
logging.basicConfig(
    level=getattr(logging, EnvironmentLoader().get("LOG_LEVEL", "WARNING").upper(), logging.WARNING),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)

from presentation.cli.commands import cli_main  # noqa: E402


def main() -> int:
    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
