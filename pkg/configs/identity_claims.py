# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

from poplab.verification import (
    BandedWindowClaim,
    IdentityOnlyClaim,
    KFibCountsClaim,
    ReverseComplementClaim,
    SeparableSuperfluousClaim,
    SinglePopSeriesClaim,
)

# Exponent vectors over (p, q, u, v, s, t).
ONE = (0, 0, 0, 0, 0, 0)
UVST = (0, 0, 1, 1, 1, 1)
INCREASING_2 = (1, 0, 2, 1, 1, 2)
DECREASING_2 = (0, 1, 1, 2, 2, 1)

# |S_n(P_j, ~P_3)| = F^(j-1)_{n+1}: brute force up to n_max, banded DP further.
kfib_counts = {
    "claim_class": KFibCountsClaim,
    "claim_args": {"js": (3, 4, 5, 6), "banded_n_max": 30},
    "n_max": 9,
}

# Flat-POP avoidance as a displacement window, plus the transfer-matrix count and
# the a <-> b mirror.
banded_window = {
    "claim_class": BandedWindowClaim,
    "claim_args": {"sizes": (2, 3, 4, 5, 6)},
    "n_max": 8,
}

separable_superfluous = {
    "claim_class": SeparableSuperfluousClaim,
    "claim_args": {},
    "n_max": 8,
}

identity_only = {
    "claim_class": IdentityOnlyClaim,
    "claim_args": {"ls": (2, 3, 4, 5)},
    "n_max": 6,
}

reverse_complement = {
    "claim_class": ReverseComplementClaim,
    "claim_args": {"sizes": (3, 4, 5)},
    "n_max": 7,
}

# Printed truncations of G_2, G_3, G_4 (and their ~G counterparts).
single_pop_series = {
    "claim_class": SinglePopSeriesClaim,
    "claim_args": {
        "printed": {
            2: [[(ONE, 1)], [(UVST, 1)], [(INCREASING_2, 1)]],
            3: [[(ONE, 1)], [(UVST, 1)], [(INCREASING_2, 1), (DECREASING_2, 1)]],
            4: [[(ONE, 1)], [(UVST, 1)], [(INCREASING_2, 1), (DECREASING_2, 1)]],
        }
    },
    "n_max": 2,
}

CONFIGS = {
    "kfib-counts": kfib_counts,
    "banded-window": banded_window,
    "separable-superfluous": separable_superfluous,
    "identity-only": identity_only,
    "reverse-complement": reverse_complement,
    "single-pop-series": single_pop_series,
}
