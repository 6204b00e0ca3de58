"""Values frozen from the independent oracles in ``oracles.py``."""

# (gens, relations, dimension, idempotent count); counts from galois_idempotent_count
IDEMPOTENT_FIXTURES = [
    (("x",), ["x"], 1, 2),
    (("x",), ["x^2"], 2, 2),
    (("x",), ["x^2 - x"], 2, 4),
    (("x",), ["x^2 - 1"], 2, 4),
    (("x",), ["x^2 + 1"], 2, 2),
    (("x",), ["x^3"], 3, 2),
    (("x",), ["x^3 - x"], 3, 8),
    (("x",), ["x^3 - x^2"], 3, 4),
    (("x",), ["x^3 - 2"], 3, 2),
    (("x",), ["x^4 - 1"], 4, 8),
    (("x",), ["x^4 - x^2"], 4, 8),
    (("x",), ["x^5 - x"], 5, 16),
    (("x",), ["x^6 - 1"], 6, 16),
    (("x",), ["x^6 - x^4"], 6, 8),
    (("x", "y"), ["x^2", "y^2"], 4, 2),
    (("x", "y"), ["x^2 - x", "y^2 - y"], 4, 16),
    (("x", "y"), ["x^2 - x", "y^2"], 4, 4),
    (("x", "y"), ["x*y", "x^2 - x", "y^2 - y"], 3, 8),
    (("x", "y"), ["x^2 - 2", "y^2 - 3"], 4, 2),
    (("x", "y"), ["x^3", "y^2"], 6, 2),
    (("x", "y"), ["x^2 - x", "y^3 - y"], 6, 64),
    (("x", "y", "z"), ["x^2 - x", "y^2 - y", "z^2"], 8, 16),
]
