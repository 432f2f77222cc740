"""
ppgrowth - potentially positive words in free groups and their growth
"""
