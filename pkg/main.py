import logging
import sys

from cli.cli_initializer import CliInitializer


if __name__ == "__main__":
    # Handlers write JSON to stdout, so logs go to stderr
    logging.basicConfig(level=logging.INFO, stream=sys.stderr)

    cli_initializer = CliInitializer()
    sys.exit(cli_initializer.run())
