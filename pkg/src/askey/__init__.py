"""Exact construction and verification of Christoffel transforms for the Askey-scheme families."""
