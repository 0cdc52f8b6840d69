from ._counting import PointCounts, count_points, count_points_affine, count_table, projective_points, projective_size, is_degenerate, batched_det_mod_p, check_prime
from ._crt import crt_reconstruct, candidates_within
from ._checks import CongruenceCheck, check_congruence, VerificationReport, verify_classes, StratificationReport, check_stratification_counts, check_restriction
