from ._configuration import Configuration, configuration_from_dict, incidence_configuration, vandermonde_realization
from ._polynomial import ConfigPolynomial, config_polynomial, graph_polynomial, det_mod_p, batched_det_mod_p, reduced_laplacian, evaluate_graph_via_laplacian
