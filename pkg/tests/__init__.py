"""Test package for Holo Search SDK."""
