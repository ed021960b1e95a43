# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

from poplab.verification import (
    CorollaryClaim,
    ExplicitGFClaim,
    FixtureAuditClaim,
    SystemVsExplicitClaim,
)

from .config_utils import derive_claim, pair_name

PAIRS = [(j, l) for j in range(3, 6) for l in range(3, 6)]  # noqa: E741

# Explicit F_{j,l} against brute force over separable avoiders. Pairs with j > l
# go through the u<->t, v<->s exchange.
base_explicit_gf_claim = {
    "claim_class": ExplicitGFClaim,
    "claim_args": {"j": 3, "l": 3},
    "n_max": 7,
}

# The solved functional-equation system is pure algebra, so it can go further.
base_system_claim = {
    "claim_class": SystemVsExplicitClaim,
    "claim_args": {"j": 3, "l": 3},
    "n_max": 8,
}

# Univariate corollaries. Denominators are listed constant term first and the
# printed numerators are all 1.
corollary_3_3 = {
    "claim_class": CorollaryClaim,
    "claim_args": {
        "j": 3,
        "l": 3,
        "denominator": [1, -1, -1],
        "printed_terms": [1, 1, 2, 3, 5, 8, 13, 21],
        "errata": [],
        "recurrence_terms": 17,
    },
    "n_max": 7,
}
corollary_3_4 = derive_claim(
    corollary_3_3,
    l=4,
    denominator=[1, -1, -1, -1],
    printed_terms=[1, 1, 2, 4, 7, 13, 24, 44],
)
corollary_3_5 = derive_claim(
    corollary_3_3,
    l=5,
    denominator=[1, -1, -1, -1, -1],
    printed_terms=[1, 1, 2, 4, 8, 15, 29, 56],
)
corollary_4_4 = derive_claim(
    corollary_3_3,
    j=4,
    l=4,
    denominator=[1, -1, -1, -3, -1],
    printed_terms=[1, 1, 2, 6, 12, 25, 57, 124],
)
corollary_4_5 = derive_claim(
    corollary_3_3,
    j=4,
    l=5,
    denominator=[1, -1, -1, -3, -5, -1],
    printed_terms=[1, 1, 2, 6, 16, 34, 79, 193],
)
# The printed (5,5) expansion disagrees with its own denominator from x^5 on;
# the denominator and brute force give 52, 122, 321.
corollary_5_5 = derive_claim(
    corollary_3_3,
    j=5,
    l=5,
    denominator=[1, -1, -1, -3, -11, -7, -1],
    printed_terms=[1, 1, 2, 6, 22, 58, 137, 385],
    errata=[5, 6, 7],
)

fixture_audit = {
    "claim_class": FixtureAuditClaim,
    "claim_args": {},
    "n_max": 12,
}

CONFIGS = dict()
CONFIGS.update(
    {
        pair_name("explicit-gf", j, l): derive_claim(base_explicit_gf_claim, j=j, l=l)
        for j, l in PAIRS
    }
)
CONFIGS.update(
    {
        pair_name("system-vs-explicit", j, l): derive_claim(base_system_claim, j=j, l=l)
        for j, l in PAIRS
    }
)
CONFIGS.update(
    {
        "corollary-3-3": corollary_3_3,
        "corollary-3-4": corollary_3_4,
        "corollary-3-5": corollary_3_5,
        "corollary-4-4": corollary_4_4,
        "corollary-4-5": corollary_4_5,
        "corollary-5-5": corollary_5_5,
        "fixture-audit": fixture_audit,
    }
)
