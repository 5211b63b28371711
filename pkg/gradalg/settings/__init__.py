"""
Settings package initialization.
"""
