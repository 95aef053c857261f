import sys

from clawsplit.cli import main

sys.exit(main())
