import sys

from binlambda.cli import main

sys.exit(main())
