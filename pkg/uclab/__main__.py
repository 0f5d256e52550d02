import sys

from uclab.main import main

sys.exit(main())
