"""unit_dimension

Lower and upper bounds on the unit-distance dimension of finite graphs.
"""

__version__ = "0.1"
