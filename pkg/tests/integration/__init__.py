"""Integration tests for design-lattice."""
