"""
realgeom Test Suite
"""
