import sys

from listbatch.cli import main

sys.exit(main())
