# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

"""Entrypoint for poplab commands: ``python run.py <subcommand> ...``."""

import sys

from configs import CLAIMS
from poplab.cli import main

if __name__ == "__main__":
    sys.exit(main(all_claims=CLAIMS))
