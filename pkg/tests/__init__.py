# Empty __init__.py to mark tests/ as a package
