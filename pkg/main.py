import sys

from apps.cli.parser import main

if __name__ == "__main__":
    sys.exit(main())
