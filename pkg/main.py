# Entry point for the midr command-line tool
import sys

from cli.commands import main

if __name__ == "__main__":
    sys.exit(main())
