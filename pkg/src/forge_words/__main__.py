import sys

from forge_words.cli.main import main

sys.exit(main())
