"""Test cases for the dag_zeropad package."""
