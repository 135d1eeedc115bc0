import sys

from pwmirror.cli import main

sys.exit(main())
