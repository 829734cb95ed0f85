"""
Hypergraph distribution discriminators.

Exact and sampled integral probability metrics over classes of k-uniform
hypergraphs, their capacity, the discriminators and closeness testers built
on them, and the constructions and experiments that exercise the theory.
"""

__version__ = "0.1.0"
