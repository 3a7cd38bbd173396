import sys

from tetrabridge.cli.main import main

sys.exit(main())
