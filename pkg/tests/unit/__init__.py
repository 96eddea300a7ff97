"""Unit tests for OlegBot."""
