"""graph_addressing tests suite."""
