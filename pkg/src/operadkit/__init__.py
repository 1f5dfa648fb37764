"""operadkit: exact models of disk operads, their algebras, and their strata."""

from .geometry import (Disk, DiskConfiguration, Semidisk, SwissConfiguration,
                       act_disks, act_swiss, compose_disks, compose_swiss_Gamma,
                       compose_swiss_gamma, config_from_dict, config_to_dict,
                       disk, render_svg, semidisk, unit_disk_config,
                       unit_swiss_config, validate_disk_config,
                       validate_swiss_config)
from .graded import GradedSpace, MultilinearMap, koszul_sign
from .algebras import (AInfinityData, GAlgebraData, SwissAlgebraData,
                       check_a_infinity, check_g_algebra,
                       check_swiss_cheese_algebra, load_algebra_file,
                       operation_from_pair)
from .operads import (CommutativeMultiplication, DiscreteOperad, OperadModule,
                      SymmetricCollection, endomorphism_operad,
                      make_associative_operad, make_commutative_operad,
                      module_tensor_product, product_relative_operad,
                      relative_endomorphism_operad)
from .axiomcheck import check_operad_axioms, check_relative_axioms
from .strata import (StableTree, StratumRecord, associahedron_complex,
                     enumerate_strata, filtration_table, graft_Gamma,
                     graft_gamma, stability_check, stratum_codimension,
                     stratum_dimension)
from .permutations import Permutation, all_permutations, block_permutation, direct_sum

__all__ = [name for name in dir() if not name.startswith("_")]
