"""Exact combinatorics of Brion atom sets for symmetric-subgroup orbit
closures in the classical types AI-DIV.

Submodules:

* ``coxeter``    -- arithmetic in the Weyl groups S_{n+1}, W_n, W+_n
* ``clans``      -- clans indexing K-orbits and the map psi onto twisted
  involutions
* ``matchings``  -- noncrossing symmetric perfect matchings (atom shapes)
* ``words``      -- word calculus: nested descents, word orders, rank
  functions
* ``weak_order`` -- the weak order graph on clans and path-based atoms
* ``brion``      -- closed-form atom sets, shapes, generators,
  classifications
* ``symfunc``    -- Schubert polynomials, Stanley symmetric functions,
  Schur P/Q/S functions
* ``cli``        -- batch command line driver
"""

__version__ = "0.1.0"
