from .braid_word import (
    BraidWord, block_crossing_perm, braid_compose, cable, format_braid, full_twist,
    half_twist, permutation_braid, reversal, transposition, twist_power,
    underlying_permutation,
)
from .garside import (
    GarsideNormalForm, braid_equal, braid_normal_form, finishing_set, starting_set,
)
from .labelled_braid import LabelledBraid, labelled_braid_compose, labelled_braid_equal
from .ribbon import (
    RibbonBraid, ribbon_cable, ribbon_compose, ribbon_equal, ribbon_normal_form,
)
from .syntax import parse_braid, parse_ribbon
from .checker import WordProblemChecker, check_word_problem, random_word
