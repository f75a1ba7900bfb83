"""Coded shifts, circular codes and unambiguous automata."""
