"""Allow ``python -m hyperwalk``."""

import sys

from .cli import main

sys.exit(main())
