"""Exact star counts for independent sets in trees."""
