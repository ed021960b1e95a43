# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

from copy import deepcopy

REQUIRED_KEYS = ("claim_class", "claim_args", "n_max")


def derive_claim(base, n_max=None, **claim_args):
    """Copy ``base`` and override some of its claim arguments.

    Returns:
        A new claim dict; ``base`` is left untouched.
    """
    claim = deepcopy(base)
    claim["claim_args"].update(claim_args)
    if n_max is not None:
        claim["n_max"] = n_max
    return claim


def pair_name(prefix, j, l):  # noqa: E741
    return f"{prefix}-{j}-{l}"


def check_registry(claims):
    """Validate every claim dict in a registry.

    Raises:
        ValueError: If a claim lacks a required key or has a negative n_max.
    """
    for name, claim in claims.items():
        missing = [key for key in REQUIRED_KEYS if key not in claim]
        if missing:
            raise ValueError(f"claim {name!r} is missing {', '.join(missing)}")
        if claim["n_max"] < 0:
            raise ValueError(f"claim {name!r} has a negative n_max")
    return claims
