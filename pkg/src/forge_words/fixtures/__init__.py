"""Checked-in reference objects: the r=2 quartic and the r=1, r=2 recurrence operators."""
