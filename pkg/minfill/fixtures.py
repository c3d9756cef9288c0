"""
Worked examples with known answers: cut matrices, dual vertices and weight
formulas for the named trees on 4, 5 and 6 points, and the vertex counts
known for 7 points.

Vertices are listed in their tabulated order, which is not the
sorted order enumerate_vertices returns; compare them as sets or through
coordinates.
"""
from fractions import Fraction


def _matrix(text):
    return tuple(tuple(int(x) for x in line.split()) for line in text.strip().splitlines())


def _vertex(denominator, numerators):
    return tuple(Fraction(x, denominator) for x in numerators)


MATRIX_4 = _matrix("""
1 1 1 0 0 0
1 0 0 1 1 0
0 1 0 1 0 1
0 0 1 0 1 1
0 1 1 1 1 0
""")

MATRIX_5 = _matrix("""
1 1 1 1 0 0 0 0 0 0
1 0 0 0 1 1 1 0 0 0
0 1 0 0 1 0 0 1 1 0
0 0 1 0 0 1 0 1 0 1
0 0 0 1 0 0 1 0 1 1
0 1 1 1 1 1 1 0 0 0
0 0 1 1 0 1 1 1 1 0
""")

MATRIX_6_CATERPILLAR = _matrix("""
1 1 1 1 1 0 0 0 0 0 0 0 0 0 0
1 0 0 0 0 1 1 1 1 0 0 0 0 0 0
0 1 0 0 0 1 0 0 0 1 1 1 0 0 0
0 0 1 0 0 0 1 0 0 1 0 0 1 1 0
0 0 0 1 0 0 0 1 0 0 1 0 1 0 1
0 0 0 0 1 0 0 0 1 0 0 1 0 1 1
0 1 1 1 1 1 1 1 1 0 0 0 0 0 0
0 0 1 1 1 0 1 1 1 1 1 1 0 0 0
0 0 0 1 1 0 0 1 1 0 1 1 1 1 0
""")

MATRIX_6_SNOWFLAKE = _matrix("""
1 1 1 1 1 0 0 0 0 0 0 0 0 0 0
1 0 0 0 0 1 1 1 1 0 0 0 0 0 0
0 1 0 0 0 1 0 0 0 1 1 1 0 0 0
0 0 1 0 0 0 1 0 0 1 0 0 1 1 0
0 0 0 1 0 0 0 1 0 0 1 0 1 0 1
0 0 0 0 1 0 0 0 1 0 0 1 0 1 1
0 1 1 1 1 1 1 1 1 0 0 0 0 0 0
0 1 1 0 0 1 1 0 0 0 1 1 1 1 0
0 0 0 1 1 0 0 1 1 0 1 1 1 1 0
""")

VERTICES_4 = (
    _vertex(2, (1, 0, 1, 1, 0, 1)),
    _vertex(2, (1, 1, 0, 0, 1, 1)),
)

VERTICES_5 = (
    _vertex(2, (1, 0, 0, 1, 1, 0, 0, 1, 0, 1)),
    _vertex(2, (1, 1, 0, 0, 0, 0, 1, 1, 0, 1)),
    _vertex(2, (1, 0, 1, 0, 1, 0, 0, 0, 1, 1)),
    _vertex(2, (1, 1, 0, 0, 0, 1, 0, 0, 1, 1)),
)

VERTICES_6_CATERPILLAR = (
    _vertex(2, (1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1)),
    _vertex(2, (1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1)),
    _vertex(2, (1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1)),
    _vertex(2, (1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1)),
    _vertex(2, (1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1)),
    _vertex(2, (1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1)),
    _vertex(2, (1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1)),
    _vertex(2, (1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1)),
)

VERTICES_6_SNOWFLAKE = (
    _vertex(2, (1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1)),
    _vertex(2, (1, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1)),
    _vertex(2, (1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1)),
    _vertex(2, (1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1)),
    _vertex(4, (2, 1, 0, 0, 1, 0, 1, 1, 0, 2, 0, 1, 1, 0, 2)),
    _vertex(4, (2, 0, 1, 1, 0, 1, 0, 0, 1, 2, 0, 1, 1, 0, 2)),
    _vertex(2, (1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1)),
    _vertex(2, (1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1)),
    _vertex(4, (2, 0, 1, 0, 1, 1, 0, 1, 0, 2, 1, 0, 0, 1, 2)),
    _vertex(4, (2, 1, 0, 1, 0, 0, 1, 0, 1, 2, 1, 0, 0, 1, 2)),
    _vertex(2, (1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1)),
    _vertex(2, (1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1)),
)

# 1-based positions in the tables above: caterpillar vertex -> snowflake vertex
SHARED_6 = ((1, 7), (2, 8), (5, 11), (6, 12))

FORMULAS_4 = (
    '1/2 (d12 + d14 + d23 + d34)',
    '1/2 (d12 + d13 + d24 + d34)',
)

FORMULAS_5 = (
    '1/2 (d12 + d15 + d23 + d34 + d45)',
    '1/2 (d12 + d13 + d25 + d34 + d45)',
    '1/2 (d12 + d14 + d23 + d35 + d45)',
    '1/2 (d12 + d13 + d24 + d35 + d45)',
)

FORMULAS_6_CATERPILLAR = (
    '1/2 (d12 + d16 + d23 + d34 + d45 + d56)',
    '1/2 (d12 + d13 + d26 + d34 + d45 + d56)',
    '1/2 (d12 + d14 + d23 + d36 + d45 + d56)',
    '1/2 (d12 + d13 + d24 + d36 + d45 + d56)',
    '1/2 (d12 + d15 + d23 + d34 + d46 + d56)',
    '1/2 (d12 + d13 + d25 + d34 + d46 + d56)',
    '1/2 (d12 + d14 + d23 + d35 + d46 + d56)',
    '1/2 (d12 + d13 + d24 + d35 + d46 + d56)',
)

FORMULAS_6_SNOWFLAKE = (
    '1/2 (d12 + d16 + d24 + d34 + d35 + d56)',
    '1/2 (d12 + d14 + d26 + d34 + d35 + d56)',
    '1/2 (d12 + d15 + d24 + d34 + d36 + d56)',
    '1/2 (d12 + d14 + d25 + d34 + d36 + d56)',
    '1/4 (2d12 + d13 + d16 + d24 + d25 + 2d34 + d36 + d45 + 2d56)',
    '1/4 (2d12 + d14 + d15 + d23 + d26 + 2d34 + d36 + d45 + 2d56)',
    '1/2 (d12 + d16 + d23 + d34 + d45 + d56)',
    '1/2 (d12 + d13 + d26 + d34 + d45 + d56)',
    '1/4 (2d12 + d14 + d16 + d23 + d25 + 2d34 + d35 + d46 + 2d56)',
    '1/4 (2d12 + d13 + d15 + d24 + d26 + 2d34 + d35 + d46 + 2d56)',
    '1/2 (d12 + d15 + d23 + d34 + d46 + d56)',
    '1/2 (d12 + d13 + d25 + d34 + d46 + d56)',
)

# (shape, n) -> (matrix, vertices, formulas)
GOLDEN = {
    ('caterpillar', 4): (MATRIX_4, VERTICES_4, FORMULAS_4),
    ('caterpillar', 5): (MATRIX_5, VERTICES_5, FORMULAS_5),
    ('caterpillar', 6): (MATRIX_6_CATERPILLAR, VERTICES_6_CATERPILLAR, FORMULAS_6_CATERPILLAR),
    ('snowflake', 6): (MATRIX_6_SNOWFLAKE, VERTICES_6_SNOWFLAKE, FORMULAS_6_SNOWFLAKE),
}

# (shape, n) -> (vertex count, largest multiplicity)
VERTEX_COUNTS_7 = {
    ('caterpillar', 7): (16, 1),
    ('snowflake', 7): (32, 2),
}
