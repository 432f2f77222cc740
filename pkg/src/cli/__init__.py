"""
Command processing for the ppgrowth command line
"""
