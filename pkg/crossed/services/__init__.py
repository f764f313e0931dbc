from .checker import CrossedIdentityChecker, check_crossed_identities
from .families import CrossedFamily
from .rewrite import CrossedRewrite, count_factorizations, rewrite_past_mono, underlying_sets_agree
