"""Integration tests for OlegBot."""
