"""HTTP service wrapping the analysis library."""
