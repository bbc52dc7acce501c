# domain/algebra/__init__.py
"""Pure algorithms over the domain entities; every function is side-effect free"""
