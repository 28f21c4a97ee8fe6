import sys

from acr_workbench.cli.app import main

sys.exit(main())
