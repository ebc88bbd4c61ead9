"""``python -m simplicial_cm``"""
import sys

from .cli import main

sys.exit(main())
