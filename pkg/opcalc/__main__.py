import sys

from opcalc.cli import main

sys.exit(main())
