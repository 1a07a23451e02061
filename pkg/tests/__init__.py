"""Tests package for pnilrep."""
