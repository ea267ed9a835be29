"""Tests for hyperwalk."""
