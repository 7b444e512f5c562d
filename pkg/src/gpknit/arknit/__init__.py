"""Almost split sequences and AR quivers for Gprj-Λ, S(Gprj-Λ) and H(Gprj-Λ)."""

from .gprj import ar_quiver_gprj, ass_gprj, gprj_end_dim, names
from .quiver import AlmostSplitSeq, ARQuiver, HPair, Mod, ObjectDescriptor, Sub0, SubId, SubMono, knit
from .sub import (
    materialize_sub,
    sub_ar_quiver_oracle,
    sub_ass_template,
    sub_full_ar_quiver,
    sub_indecomposables,
    sub_sequences,
    sub_stable_component,
    sub_stable_components,
)
from .hcat import (
    check_monic,
    h_ar_quiver,
    h_ar_quiver_An,
    h_ass_monic,
    h_ass_selfinjective,
    h_ass_templates,
    h_catalog_objects,
    h_indecomposables,
    h_sequences,
    materialize_h,
)
