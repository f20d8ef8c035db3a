"""Exact cluster variables, thin-module characters and generalized minors on Coxeter double Bruhat cells."""
from .laurent import LaurentPoly, VarTable
from .cartan import CartanData, RootVec, WeightVec, cartan_companion, cartan_from_matrix, coxeter_word
from .mutation import ExchangeMatrix, Seed, cg_matrices, find_by_gvector, frame, mutate_matrix, variable_along
from .quiver import CycleQuiver, IntervalModule, cluster_character_interval
from .network import build_network, enumerate_collections, minor_by_paths
from .group import coxeter_element, substitution_map, wedge_minor_oracle

__all__ = [
    "LaurentPoly", "VarTable", "CartanData", "RootVec", "WeightVec", "cartan_companion", "cartan_from_matrix",
    "coxeter_word", "ExchangeMatrix", "Seed", "cg_matrices", "find_by_gvector", "frame", "mutate_matrix",
    "variable_along", "CycleQuiver", "IntervalModule", "cluster_character_interval", "build_network",
    "enumerate_collections", "minor_by_paths", "coxeter_element", "substitution_map", "wedge_minor_oracle",
]
