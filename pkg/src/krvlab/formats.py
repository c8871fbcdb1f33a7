"""Shared constants for machine-readable exports."""

SCHEMA = "krv-lab/1"
