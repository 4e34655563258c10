"""Exact enumerative computations for nodal curves on K3 surfaces.

Submodules:

* :mod:`k3calc.qseries` - truncated integer q-series and eta products
* :mod:`k3calc.admissible` - 1-admissible sequences and fixed-fiber counts
* :mod:`k3calc.chow` - x/theta intersection calculus on symmetric products
* :mod:`k3calc.bounds` - assembled genus lower bounds
* :mod:`k3calc.cli` - the ``k3calc`` command
"""

from .admissible import (
    AdmissibleSeq,
    Partition,
    enumerate_one_admissible,
    fixed_fiber_count,
    is_one_admissible,
    partition_to_sequence,
    sequence_to_partition,
    virtual_count,
    weight,
)
from .bounds import (
    AsymptoticFit,
    BoundReport,
    appendix_conjectural_bound,
    asymptotic_fit,
    polarization_genus,
    severi_lower_bound,
)
from .chow import (
    BundleData,
    GradedClass,
    c1_symmetric_product,
    chern_character_FN,
    chern_classes_from_character,
    chern_FN_closed_form,
    closed_form_genus_44,
    degeneracy_genus,
    ext_binomial,
    graded_mul,
    intersection_eval,
)
from .qseries import (
    QSeries,
    bl48_coefficient,
    eta_product,
    partition_numbers,
    series_inv,
    series_mul,
    yau_zaslow,
)

__version__ = "0.1.0"
