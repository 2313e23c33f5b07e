"""
Names of every identity hopfkit checks, and the equation tags they evaluate.

Report entries carry one of these values as their identity id. The `*_TAGS`
tables map identities to equation tags per setting: the same identity (a
counit law, say) is a labelled equation in one setting and an unlabelled
definitional condition in another. Identities missing from a table carry no
tag.
"""

from enum import Enum
from typing import Dict


class Identity(Enum):
    # algebras, coalgebras, antipodes
    ASSOCIATIVITY = "associativity"
    UNIT = "unit"
    COASSOCIATIVITY = "coassociativity"
    COUNIT_LEFT = "counit-left"
    COUNIT_RIGHT = "counit-right"
    COPRODUCT_MULTIPLICATIVE = "coproduct-multiplicative"
    COPRODUCT_UNIT = "coproduct-unit"
    COUNIT_MULTIPLICATIVE = "counit-multiplicative"
    COUNIT_UNIT = "counit-unit"
    ANTIPODE_LEFT = "antipode-left"
    ANTIPODE_RIGHT = "antipode-right"
    ANTIPODE_ANTIMULTIPLICATIVE = "antipode-antimultiplicative"
    ANTIPODE_UNIT = "antipode-unit"
    ANTIPODE_INVERSE = "antipode-inverse"
    COUNIT_ANTIPODE = "counit-antipode"

    # quasi-Hopf algebras
    QUASI_COASSOCIATIVITY = "quasi-coassociativity"
    PENTAGON = "pentagon"
    ASSOCIATOR_COUNIT_FIRST = "associator-counit-first"
    ASSOCIATOR_COUNIT_MIDDLE = "associator-counit-middle"
    ASSOCIATOR_COUNIT_LAST = "associator-counit-last"
    ASSOCIATOR_INVERSE = "associator-inverse"
    ANTIPODE_ALPHA = "antipode-alpha"
    ANTIPODE_BETA = "antipode-beta"
    ASSOCIATOR_BETA_ALPHA = "associator-beta-alpha"
    ASSOCIATOR_ALPHA_BETA = "associator-alpha-beta"
    ALPHA_BETA_NORMALIZATION = "alpha-beta-normalization"

    # modules and module algebras
    MODULE_ASSOCIATIVITY = "module-associativity"
    MODULE_UNIT = "module-unit"
    RIGHT_MODULE_ASSOCIATIVITY = "right-module-associativity"
    RIGHT_MODULE_UNIT = "right-module-unit"
    BIMODULE_COMPATIBILITY = "bimodule-compatibility"
    QUASI_ASSOCIATIVITY = "quasi-associativity"
    ACTION_MULTIPLICATIVE = "action-multiplicative"
    ACTION_UNIT = "action-unit"

    # comodule and bicomodule algebras
    RIGHT_COACTION_MULTIPLICATIVE = "right-coaction-multiplicative"
    RIGHT_COACTION_UNIT = "right-coaction-unit"
    RIGHT_COASSOCIATIVITY = "right-coassociativity"
    RIGHT_PENTAGON = "right-pentagon"
    RIGHT_COUNIT = "right-counit"
    RIGHT_ASSOCIATOR_COUNIT_MIDDLE = "right-associator-counit-middle"
    RIGHT_ASSOCIATOR_COUNIT_LAST = "right-associator-counit-last"
    RIGHT_ASSOCIATOR_INVERSE = "right-associator-inverse"
    LEFT_COACTION_MULTIPLICATIVE = "left-coaction-multiplicative"
    LEFT_COACTION_UNIT = "left-coaction-unit"
    LEFT_COASSOCIATIVITY = "left-coassociativity"
    LEFT_PENTAGON = "left-pentagon"
    LEFT_COUNIT = "left-counit"
    LEFT_ASSOCIATOR_COUNIT_FIRST = "left-associator-counit-first"
    LEFT_ASSOCIATOR_COUNIT_MIDDLE = "left-associator-counit-middle"
    LEFT_ASSOCIATOR_INVERSE = "left-associator-inverse"
    BICOMODULE_COMMUTATION = "bicomodule-commutation"
    BICOMODULE_LEFT_PENTAGON = "bicomodule-left-pentagon"
    BICOMODULE_RIGHT_PENTAGON = "bicomodule-right-pentagon"
    BICOMODULE_ASSOCIATOR_COUNIT_FIRST = "bicomodule-associator-counit-first"
    BICOMODULE_ASSOCIATOR_COUNIT_LAST = "bicomodule-associator-counit-last"
    BICOMODULE_ASSOCIATOR_INVERSE = "bicomodule-associator-inverse"

    # morphisms of bicomodule algebras
    MORPHISM_MULTIPLICATIVE = "morphism-multiplicative"
    MORPHISM_UNIT = "morphism-unit"
    MORPHISM_RIGHT_COLINEAR = "morphism-right-colinear"
    MORPHISM_LEFT_COLINEAR = "morphism-left-colinear"
    MORPHISM_RIGHT_ASSOCIATOR = "morphism-right-associator"
    MORPHISM_LEFT_ASSOCIATOR = "morphism-left-associator"
    MORPHISM_BICOMODULE_ASSOCIATOR = "morphism-bicomodule-associator"
    MORPHISM_INVERSE = "morphism-inverse"

    # Yetter-Drinfeld modules and algebras
    YD_COASSOCIATIVITY = "yd-coassociativity"
    YD_COUNIT = "yd-counit"
    YD_COMPATIBILITY = "yd-compatibility"
    YD_ALGEBRA_UNIT = "yd-algebra-unit"
    YD_ALGEBRA_MULTIPLICATIVE = "yd-algebra-multiplicative"
    SMASH_COACTION_CRITERION = "smash-coaction-criterion"

    # Hopf bimodules and the coinvariant projector
    HOPF_BIMODULE_RIGHT_COUNIT = "hopf-bimodule-right-counit"
    HOPF_BIMODULE_RIGHT_COASSOCIATIVITY = "hopf-bimodule-right-coassociativity"
    HOPF_BIMODULE_LEFT_COUNIT = "hopf-bimodule-left-counit"
    HOPF_BIMODULE_LEFT_COASSOCIATIVITY = "hopf-bimodule-left-coassociativity"
    HOPF_BIMODULE_BICOMODULE = "hopf-bimodule-bicomodule"
    RIGHT_COACTION_BIMODULE_MAP = "right-coaction-bimodule-map"
    LEFT_COACTION_BIMODULE_MAP = "left-coaction-bimodule-map"
    PROJECTOR_IDEMPOTENT = "projector-idempotent"
    PROJECTOR_RIGHT_ACTION = "projector-right-action"
    PROJECTOR_LEFT_ACTION = "projector-left-action"
    INDUCED_ACTION_ASSOCIATIVE = "induced-action-associative"
    INDUCED_ACTION_UNIT = "induced-action-unit"
    PROJECTOR_DECOMPOSITION = "projector-decomposition"
    PROJECTOR_RECONSTRUCTION = "projector-reconstruction"
    PROJECTOR_COINVARIANCE = "projector-coinvariance"
    COINVARIANTS_AGREE = "coinvariants-agree"
    COINVARIANT_UNIT = "coinvariant-unit"
    COINVARIANTS_CLOSED = "coinvariants-closed"
    DECOMPOSITION_BIJECTIVE = "decomposition-bijective"
    DECOMPOSITION_LEFT_LINEAR = "decomposition-left-linear"
    DECOMPOSITION_RIGHT_LINEAR = "decomposition-right-linear"
    DECOMPOSITION_LEFT_COLINEAR = "decomposition-left-colinear"
    DECOMPOSITION_RIGHT_COLINEAR = "decomposition-right-colinear"
    ROUND_TRIP_SECTION = "round-trip-section"
    ROUND_TRIP_BIJECTIVE = "round-trip-bijective"
    ROUND_TRIP_ACTION = "round-trip-action"
    ROUND_TRIP_COACTION = "round-trip-coaction"

    # weak Hopf algebras
    UNIT_COPRODUCT_LEFT = "unit-coproduct-left"
    UNIT_COPRODUCT_RIGHT = "unit-coproduct-right"
    COUNIT_TRIPLE_FIRST = "counit-triple-first"
    COUNIT_TRIPLE_SECOND = "counit-triple-second"
    ANTIPODE_TARGET = "antipode-target"
    ANTIPODE_SOURCE = "antipode-source"
    ANTIPODE_TRIPLE = "antipode-triple"
    UNIT_COPRODUCT_TARGET = "unit-coproduct-target"
    UNIT_COPRODUCT_SOURCE = "unit-coproduct-source"
    TARGET_ABSORBS_TARGET = "target-absorbs-target"
    SOURCE_ABSORBS_SOURCE = "source-absorbs-source"
    COPRODUCT_OF_TARGET = "coproduct-of-target"
    COPRODUCT_OF_SOURCE = "coproduct-of-source"
    TARGET_COPRODUCT_SHIFT = "target-coproduct-shift"
    SOURCE_COPRODUCT_SHIFT = "source-coproduct-shift"
    TARGET_COUNIT_PRODUCT = "target-counit-product"
    SOURCE_COUNIT_PRODUCT = "source-counit-product"
    TARGET_MULTIPLICATIVE = "target-multiplicative"
    SOURCE_MULTIPLICATIVE = "source-multiplicative"
    TARGET_LEFT_UNIT = "target-left-unit"
    SOURCE_RIGHT_UNIT = "source-right-unit"
    UNIT_COPRODUCT_SPLIT = "unit-coproduct-split"
    SOURCE_ANTIPODE_UNIT = "source-antipode-unit"
    TARGET_ANTIPODE_UNIT = "target-antipode-unit"
    COUNIT_TARGET_ABSORB = "counit-target-absorb"
    COUNIT_SOURCE_ABSORB = "counit-source-absorb"
    SOURCE_TARGET_COMMUTE = "source-target-commute"
    SOURCE_COPRODUCT_LEFT = "source-coproduct-left"
    SOURCE_COPRODUCT_RIGHT = "source-coproduct-right"
    TARGET_COPRODUCT_LEFT = "target-coproduct-left"
    TARGET_COPRODUCT_RIGHT = "target-coproduct-right"
    SOURCE_UNIT_ANTIPODE = "source-unit-antipode"
    TARGET_UNIT_ANTIPODE = "target-unit-antipode"
    SOURCE_SLIDE = "source-slide"
    TARGET_SLIDE = "target-slide"
    TARGET_IDEMPOTENT = "target-idempotent"
    SOURCE_IDEMPOTENT = "source-idempotent"
    TARGET_SUBALGEBRA = "target-subalgebra"
    SOURCE_SUBALGEBRA = "source-subalgebra"
    ANTIPODE_TARGET_TO_SOURCE = "antipode-target-to-source"
    ACTION_UNIT_TARGET = "action-unit-target"
    QUOTIENT_WELL_DEFINED = "quotient-well-defined"
    RIGHT_UNIT_TARGET = "right-unit-target"
    LEFT_UNIT_SOURCE = "left-unit-source"
    LEFT_UNIT_COPRODUCT = "left-unit-coproduct"
    LEFT_UNIT_IN_SOURCE = "left-unit-in-source"
    LEFT_UNIT_FORMS_AGREE = "left-unit-forms-agree"
    WEAK_YD_UNIT = "weak-yd-unit"
    WEAK_YD_COMPATIBILITY = "weak-yd-compatibility"
    WEAK_YD_CONJUGATION = "weak-yd-conjugation"
    WEAK_YD_FORMS_AGREE = "weak-yd-forms-agree"
    SOURCE_ACTION_VIA_COACTION = "source-action-via-coaction"
    UNIT_COACTION_IN_SOURCE = "unit-coaction-in-source"

    # braided categories
    BRAIDING_INVERSE = "braiding-inverse"
    HEXAGON_LEFT = "hexagon-left"
    HEXAGON_RIGHT = "hexagon-right"
    CONTEXT_MORPHISM = "context-morphism"
    BIALGEBRA_COMPATIBILITY = "bialgebra-compatibility"
    YD_BRAIDING_INVERSE = "yd-braiding-inverse"
    COINVARIANTS_EQUALIZER = "coinvariants-equalizer"
    COINVARIANTS_COEQUALIZER = "coinvariants-coequalizer"
    ADJOINT_PROJECTOR = "adjoint-projector"
    PROJECTOR_ACTION = "projector-action"
    ADJOINT_PROJECTION = "adjoint-projection"
    ADJOINT_RESTRICTION = "adjoint-restriction"
    ADJOINT_MODULE_ALGEBRA = "adjoint-module-algebra"
    MULTIPLICATION_RESTRICTION = "multiplication-restriction"
    UNIT_RESTRICTION = "unit-restriction"
    PROJECTOR_ADJOINT = "projector-adjoint"
    COACTION_RESTRICTION = "coaction-restriction"
    TWO_FOLD_RIGHT_COLINEAR = "two-fold-right-colinear"
    TWO_FOLD_LEFT_COLINEAR = "two-fold-left-colinear"


_I = Identity

QUASI_HOPF_TAGS: Dict[Identity, str] = {
    _I.QUASI_COASSOCIATIVITY: "q1",
    _I.COUNIT_RIGHT: "q2",
    _I.COUNIT_LEFT: "q2",
    _I.PENTAGON: "q3",
    _I.ASSOCIATOR_COUNIT_FIRST: "q4",
    _I.ASSOCIATOR_COUNIT_MIDDLE: "q4",
    _I.ASSOCIATOR_COUNIT_LAST: "q4",
    _I.ANTIPODE_ALPHA: "q5",
    _I.ANTIPODE_BETA: "q5",
    _I.ASSOCIATOR_BETA_ALPHA: "q6",
    _I.ASSOCIATOR_ALPHA_BETA: "q6",
}

QUASI_MODULE_ALGEBRA_TAGS: Dict[Identity, str] = {_I.QUASI_ASSOCIATIVITY: "ma1"}

QUASI_YD_TAGS: Dict[Identity, str] = {
    _I.YD_COASSOCIATIVITY: "yd1",
    _I.YD_COUNIT: "yd2",
    _I.YD_COMPATIBILITY: "yd3",
    _I.YD_ALGEBRA_UNIT: "unitate",
    _I.YD_ALGEBRA_MULTIPLICATIVE: "multi",
    _I.SMASH_COACTION_CRITERION: "converseYD",
}

QUASI_YD_ALGEBRA_TAGS: Dict[Identity, str] = {**QUASI_MODULE_ALGEBRA_TAGS, **QUASI_YD_TAGS}

QUASI_BICOMODULE_TAGS: Dict[Identity, str] = {
    _I.RIGHT_COASSOCIATIVITY: "rca1",
    _I.RIGHT_PENTAGON: "rca2",
    _I.RIGHT_COUNIT: "rca3",
    _I.RIGHT_ASSOCIATOR_COUNIT_MIDDLE: "rca4",
    _I.RIGHT_ASSOCIATOR_COUNIT_LAST: "rca4",
    _I.LEFT_COASSOCIATIVITY: "lca1",
    _I.LEFT_PENTAGON: "lca2",
    _I.LEFT_COUNIT: "lca3",
    _I.LEFT_ASSOCIATOR_COUNIT_FIRST: "lca4",
    _I.LEFT_ASSOCIATOR_COUNIT_MIDDLE: "lca4",
    _I.BICOMODULE_COMMUTATION: "bca1",
    _I.BICOMODULE_LEFT_PENTAGON: "bca2",
    _I.BICOMODULE_RIGHT_PENTAGON: "bca3",
    _I.BICOMODULE_ASSOCIATOR_COUNIT_FIRST: "bca4",
    _I.BICOMODULE_ASSOCIATOR_COUNIT_LAST: "bca4",
}

QUASI_HOPF_BIMODULE_TAGS: Dict[Identity, str] = {
    _I.HOPF_BIMODULE_RIGHT_COUNIT: "qb1",
    _I.HOPF_BIMODULE_RIGHT_COASSOCIATIVITY: "qb2",
    _I.HOPF_BIMODULE_LEFT_COUNIT: "qb3",
    _I.HOPF_BIMODULE_LEFT_COASSOCIATIVITY: "qb4",
    _I.HOPF_BIMODULE_BICOMODULE: "qb5",
}

QUASI_PROJECTOR_TAGS: Dict[Identity, str] = {
    _I.INDUCED_ACTION_ASSOCIATIVE: "act",
    _I.INDUCED_ACTION_UNIT: "act",
}

WEAK_HOPF_TAGS: Dict[Identity, str] = {
    _I.UNIT_COPRODUCT_LEFT: "delta21",
    _I.UNIT_COPRODUCT_RIGHT: "delta21",
    _I.COUNIT_TRIPLE_FIRST: "exyz",
    _I.COUNIT_TRIPLE_SECOND: "exyz",
    _I.TARGET_COUNIT_PRODUCT: "cucu",
    _I.SOURCE_COUNIT_PRODUCT: "cucu",
    _I.TARGET_MULTIPLICATIVE: "lala",
    _I.SOURCE_MULTIPLICATIVE: "lala",
    _I.TARGET_LEFT_UNIT: "est",
    _I.SOURCE_RIGHT_UNIT: "est",
    _I.UNIT_COPRODUCT_TARGET: "delta1",
    _I.UNIT_COPRODUCT_SOURCE: "delta1",
    _I.UNIT_COPRODUCT_SPLIT: "delta1",
    _I.SOURCE_ANTIPODE_UNIT: "titi",
    _I.TARGET_ANTIPODE_UNIT: "titi",
    _I.COUNIT_TARGET_ABSORB: "dudu",
    _I.COUNIT_SOURCE_ABSORB: "dudu",
    _I.SOURCE_TARGET_COMMUTE: "comutst",
    _I.TARGET_COPRODUCT_LEFT: "deltaz",
    _I.TARGET_COPRODUCT_RIGHT: "deltaz",
    _I.TARGET_SLIDE: "2.31b",
}

WEAK_MODULE_ALGEBRA_TAGS: Dict[Identity, str] = {
    _I.ACTION_MULTIPLICATIVE: "modalg1",
    _I.ACTION_UNIT_TARGET: "modalg1",
}

WEAK_COMODULE_ALGEBRA_TAGS: Dict[Identity, str] = {
    _I.RIGHT_COASSOCIATIVITY: "2.2a",
    _I.RIGHT_UNIT_TARGET: "2.2b",
    _I.LEFT_COASSOCIATIVITY: "2.1a",
    _I.LEFT_UNIT_SOURCE: "2.1b",
    _I.LEFT_COACTION_MULTIPLICATIVE: "2.1c",
    _I.LEFT_UNIT_COPRODUCT: "NSW",
    _I.LEFT_UNIT_IN_SOURCE: "NV",
}

WEAK_YD_TAGS: Dict[Identity, str] = {
    _I.WEAK_YD_UNIT: "wyd1",
    _I.WEAK_YD_COMPATIBILITY: "wyd2",
    _I.WEAK_YD_CONJUGATION: "wyd3",
    _I.SOURCE_ACTION_VIA_COACTION: "calanen",
    _I.UNIT_COACTION_IN_SOURCE: "consec",
}

WEAK_COINVARIANT_TAGS: Dict[Identity, str] = {
    _I.INDUCED_ACTION_ASSOCIATIVE: "tria",
    _I.INDUCED_ACTION_UNIT: "tria",
}

BRAIDED_HOPF_TAGS: Dict[Identity, str] = {
    _I.BIALGEBRA_COMPATIBILITY: "eqbialgebra",
    _I.ANTIPODE_LEFT: "eqantipodedef",
    _I.ANTIPODE_RIGHT: "eqantipodedef",
}

BRAIDED_MODULE_ALGEBRA_TAGS: Dict[Identity, str] = {
    _I.ACTION_MULTIPLICATIVE: "eqmodulealgebra",
    _I.ACTION_UNIT: "eqmodulealgebra",
}

BRAIDED_COMODULE_ALGEBRA_TAGS: Dict[Identity, str] = {
    _I.LEFT_COACTION_MULTIPLICATIVE: "eqleftcomodulealgebra",
    _I.LEFT_COACTION_UNIT: "eqleftcomodulealgebra",
    _I.RIGHT_COACTION_MULTIPLICATIVE: "eqrightcomodulealgebra",
    _I.RIGHT_COACTION_UNIT: "eqrightcomodulealgebra",
}

BRAIDED_YD_TAGS: Dict[Identity, str] = {_I.YD_COMPATIBILITY: "eqyd"}

BRAIDED_COINVARIANT_TAGS: Dict[Identity, str] = {
    _I.COINVARIANTS_EQUALIZER: "iequalizer",
    _I.COINVARIANTS_COEQUALIZER: "pcoequalizer",
    _I.ADJOINT_PROJECTOR: "eqead",
    _I.PROJECTOR_ACTION: "eqead",
    _I.ADJOINT_PROJECTION: "eqead",
    _I.ADJOINT_RESTRICTION: "eqiad",
}

BRAIDED_STRUCTURE_TAGS: Dict[Identity, str] = {
    _I.MULTIPLICATION_RESTRICTION: "eqinabla",
    _I.PROJECTOR_ADJOINT: "eqvi",
    _I.ADJOINT_MODULE_ALGEBRA: "eqbmodalg",
    _I.COACTION_RESTRICTION: "eqinherited",
}

TAG_TABLES: Dict[str, Dict[Identity, str]] = {
    "quasi-hopf": QUASI_HOPF_TAGS,
    "quasi-module-algebra": QUASI_MODULE_ALGEBRA_TAGS,
    "quasi-yd": QUASI_YD_TAGS,
    "quasi-yd-algebra": QUASI_YD_ALGEBRA_TAGS,
    "quasi-bicomodule": QUASI_BICOMODULE_TAGS,
    "quasi-hopf-bimodule": QUASI_HOPF_BIMODULE_TAGS,
    "quasi-projector": QUASI_PROJECTOR_TAGS,
    "weak-hopf": WEAK_HOPF_TAGS,
    "weak-module-algebra": WEAK_MODULE_ALGEBRA_TAGS,
    "weak-comodule-algebra": WEAK_COMODULE_ALGEBRA_TAGS,
    "weak-yd": WEAK_YD_TAGS,
    "weak-coinvariants": WEAK_COINVARIANT_TAGS,
    "braided-hopf": BRAIDED_HOPF_TAGS,
    "braided-module-algebra": BRAIDED_MODULE_ALGEBRA_TAGS,
    "braided-comodule-algebra": BRAIDED_COMODULE_ALGEBRA_TAGS,
    "braided-yd": BRAIDED_YD_TAGS,
    "braided-coinvariants": BRAIDED_COINVARIANT_TAGS,
    "braided-structure": BRAIDED_STRUCTURE_TAGS,
}
