# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

"""Permutations avoiding partially ordered patterns: enumeration, counting,
generating functions and their verification."""

__version__ = "0.1.0"
