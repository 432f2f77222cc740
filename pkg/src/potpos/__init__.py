"""
Potential positivity: criterion, decision procedure, positivization, tree operators and encodings
"""
