import sys

from credit_weights.cli import main

sys.exit(main())
