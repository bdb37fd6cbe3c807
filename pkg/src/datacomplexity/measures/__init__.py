"""The 22 complexity measures, grouped into six categories."""
from .dimensionality import t2, t3, t4
from .feature import f1, f1v, f2, f3, f4
from .imbalance import c1, c2
from .linearity import l1, l2, l3
from .neighborhood import lsc, n1, n2, n3, n4, t1
from .network import EpsilonGraph, build_epsilon_graph, cls_coef, density, hubs

__all__ = [
    "f1", "f1v", "f2", "f3", "f4",
    "l1", "l2", "l3",
    "n1", "n2", "n3", "n4", "t1", "lsc",
    "density", "cls_coef", "hubs", "EpsilonGraph", "build_epsilon_graph",
    "t2", "t3", "t4",
    "c1", "c2",
]
