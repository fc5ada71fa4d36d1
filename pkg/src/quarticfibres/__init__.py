"""Classification toolkit for genus-3 quartic fibrations in characteristic 2.

Exact arithmetic over F_q(t) and its inseparable quartic extension, the
five families of plane rational quartic models, tower presentations and
their quartic models, explicit isomorphism witnesses, degenerate/generic
fibre analysis of the three pencils, and resolution of the pencil base
points with intersection data.
"""

__version__ = "0.1.0"
