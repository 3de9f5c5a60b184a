"""
Infrastructure Layer - Logging, wire formats, persistence and fixtures.

This layer contains:
    - logging.py: structlog configuration and LogService
    - codecs/: JSON documents for series, polynomials, operators, cache records
    - storage/: Avoider-count cache adapters (JSON lines, memory)
    - fixtures.py: Loader for the checked-in reference objects
"""
