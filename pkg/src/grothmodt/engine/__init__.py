from ._classes import ClassModT, TraceNode
from ._engine import EngineContext, class_Y, class_Ytorus, class_Y_dual_via_flats, compute_classes, corank_two_value, corank_two_candidate, rank_two_torus_value, describe
from ._explain import explain
from ._reference import ReferenceClass, DEFAULT_REFERENCES, reference_table, lookup_reference
