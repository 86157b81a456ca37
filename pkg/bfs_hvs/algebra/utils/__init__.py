"""
Utility modules for the bfs-hvs algebra layer.
"""
