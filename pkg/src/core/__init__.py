"""
Core functionality: words, automorphisms, spectral tools, configuration and errors
"""
