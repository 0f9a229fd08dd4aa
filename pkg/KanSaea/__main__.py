# File: __main__.py
# Path: KanSaea/__main__.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  06:12PM
# Description: Allows `python -m KanSaea`

import sys

from KanSaea.Cli import Main

sys.exit(Main())
