"""design-lattice - block designs, their abelian groups and zero-sum constructions."""

__version__ = "0.1.0"
