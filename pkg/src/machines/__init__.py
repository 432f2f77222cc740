"""
Cyclic automata spelling reduced words, their builders and property checks
"""
