"""Запуск через python -m mutvis"""

import sys

from .cli import main

sys.exit(main())
