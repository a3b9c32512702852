"""Allow ``python -m design_lattice``."""

from design_lattice.cli import main

main()
