import sys

from surfbracket.cli import main

sys.exit(main())
