"""Desk-scale exact solvers, checkers, generators and Monte Carlo experiments
for a collection of open problems in combinatorics."""

__version__ = "0.1.0"
