"""
Application Layer - The exact-enumeration operations.

This layer contains:
    - combinatorics/: patterns, word enumeration, symmetries, good-pair bijection
    - counting/: avoider counts, exactly-one-123 counts, oracles
    - series/: truncated series, g-system, weight enumerators
    - algebraic/: algebraic equations of series
    - recurrence/: recurrence operators and asymptotics
    - linear_algebra.py: exact nullspaces
    - sequences.py: named integer sequences
    - ports/: interfaces for external dependencies
"""
