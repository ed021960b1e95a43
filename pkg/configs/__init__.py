# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

from .config_utils import check_registry
from .identity_claims import CONFIGS as IDENTITY_CLAIMS
from .theorem_claims import CONFIGS as THEOREM_CLAIMS

CLAIMS = dict()
CLAIMS.update(THEOREM_CLAIMS)
CLAIMS.update(IDENTITY_CLAIMS)
check_registry(CLAIMS)
