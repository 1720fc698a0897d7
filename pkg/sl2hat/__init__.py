__version__ = 'v2026.10'
