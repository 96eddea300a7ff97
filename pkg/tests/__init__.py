"""Test package for OlegBot."""
