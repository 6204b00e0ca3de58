"""Presheaf toposes on finite sites and the cohesion checks run inside them."""
from .adjoints import (AdjointString, HyperconnectedReport, TriangleReport, check_triangles,
                       components, fully_faithful_check, hyperconnected_check, pi0,
                       preserves_product)
from .fixtures import (ACCEPTED_SITES, FIXTURES, constant_monoid01, constant_rig, pointed_T,
                       surrogate_group)
from .generate import exponential_instances, pointed, presheaf_family
from .internal import (EulerRealsPresheaf, InternalMonoid, Prop1Report, Prop2InternalReport,
                       UnitsReport, euler_reals_presheaf, lie_kernel, prop1_check,
                       prop2_internal, t_discrete_check, units_and_bidirectional)
from .presheaf import (DEFAULT_MAX_ENUMERATION, Exponential, NatTrans, NotAPresheaf,
                       NotNatural, Presheaf, SizeLimit, coequalizer, constant, coproduct,
                       equalizer, exponential, find_isomorphism, global_element, hom_count,
                       hom_list, initial, nat_trans, product, pullback, representable,
                       subpresheaf, terminal)
from .site import (BUILTIN_SITES, FinCat, InvalidCategory, NotPreCohesiveSite, SiteVerdict,
                   arrow_site, check_precohesive_site, interval_site, point_site,
                   retract_site)

__all__ = [
    "ACCEPTED_SITES", "AdjointString", "arrow_site", "BUILTIN_SITES", "check_precohesive_site",
    "check_triangles", "coequalizer", "components", "constant", "constant_monoid01",
    "constant_rig", "coproduct", "DEFAULT_MAX_ENUMERATION", "equalizer",
    "euler_reals_presheaf", "EulerRealsPresheaf", "Exponential", "exponential",
    "exponential_instances", "FinCat", "find_isomorphism", "FIXTURES", "fully_faithful_check",
    "global_element", "hom_count", "hom_list", "hyperconnected_check", "HyperconnectedReport",
    "initial", "InternalMonoid", "interval_site", "InvalidCategory", "lie_kernel", "nat_trans",
    "NatTrans", "NotAPresheaf", "NotNatural", "NotPreCohesiveSite", "pi0", "point_site",
    "pointed", "pointed_T", "preserves_product", "Presheaf", "presheaf_family", "product",
    "prop1_check", "Prop1Report", "prop2_internal", "Prop2InternalReport", "pullback",
    "representable", "retract_site", "SiteVerdict", "SizeLimit", "subpresheaf",
    "surrogate_group", "t_discrete_check", "terminal", "TriangleReport",
    "units_and_bidirectional", "UnitsReport",
]
