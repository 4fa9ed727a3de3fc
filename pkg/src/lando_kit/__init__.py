"""Combinatorial decision tools for intersecting spheres via dual trees."""
