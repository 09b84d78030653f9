#!/usr/bin/env python3
"""
@file: main.py
@description: Главный файл запуска командной строки MutVis
@dependencies: mutvis.cli
@created: 2026-10-18
"""

import sys
from pathlib import Path

# Добавляем путь к src для импортов
sys.path.insert(0, str(Path(__file__).parent / "src"))

from mutvis.cli import main


if __name__ == "__main__":
    sys.exit(main())
