"""
Growth counting, density series, sampling and report rendering
"""
