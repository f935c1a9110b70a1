"""Odd covers of graphs by complete bipartite graphs."""
