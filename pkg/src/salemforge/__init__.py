"""salemforge: exact-arithmetic lattices, isometries and positivity tests
for realizing Salem numbers as entropies of K3 surface automorphisms."""

__version__ = "0.1.0"
