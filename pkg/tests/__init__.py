"""Test suite for design-lattice."""
