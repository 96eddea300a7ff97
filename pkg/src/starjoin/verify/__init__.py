"""Verification pipelines, certificates and the suite runner."""
