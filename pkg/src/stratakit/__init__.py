"""Exact computation with stratified bound quiver algebras.

Build an algebra from a quiver with relations over Q or GF(p), then compute
standard/costandard modules, filtration certificates, the characteristic
tilting module, good filtration dimensions, Ringel duals, and subalgebra
induction checks.  The `stratakit` command line drives all of it from
plain-text description files.
"""

from .errors import StratakitError
from .fields import GF, QQ, FieldSpec
from .linalg import Matrix
from .parser import AlgebraFile, parse, parse_file, serialize
from .quiver import Path, PathAlgebra, QuiverSpec, build_algebra
from .reps import (Morphism, Rep, Submodule, decompose, direct_sum, hom_basis,
                   injective, is_isomorphic, projective, regular_module,
                   simple)
from .strat import (classify, costandard, filtration_certificate,
                    proper_costandard, proper_standard, standard)
from .tilting import (characteristic_cotilting, characteristic_tilting,
                      gfd_algebra, gfd_delta_bar, gfd_nabla_bar, ringel_dual,
                      t_codim, t_dim, verify_section2)
from .borel import Embedding, check_embedding, duality_check, find_duality, \
    induce, is_exact_borel
from .homology import (ext_dim, global_dim, inj_dim, min_proj_resolution,
                       proj_dim)

__version__ = "0.1.0"
