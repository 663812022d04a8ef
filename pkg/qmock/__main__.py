import sys

from qmock.cli import main


sys.exit(main())
