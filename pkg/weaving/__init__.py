# Weaving knot invariants
