# Minimal fillings of finite pseudo-metric spaces via the dual LP polyhedron
# of each binary tree type. Exact rational arithmetic throughout.

__version__ = '1.0.0'
