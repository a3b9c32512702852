"""Unit tests for design-lattice."""
