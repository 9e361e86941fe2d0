import sys

from annideal.cli import main

sys.exit(main())
