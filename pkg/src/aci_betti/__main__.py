"""Allow running with `python -m aci_betti`."""

from aci_betti.app import main

main()
