"""
gradalg - exact computations with algebras graded over a small category.
"""
