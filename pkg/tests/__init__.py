"""Test suite for lsakit."""
