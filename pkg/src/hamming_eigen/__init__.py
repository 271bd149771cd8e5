"""Minimum-support eigenfunctions and 1-perfect bitrades of Hamming graphs."""
