# coding: utf-8

# # The Tietze graph and the X̄ host

# A 4-regular graph G is H-colorable when its edges can be colored with the
# edges of H so that every vertex of G sees exactly the boundary of some vertex
# of H. Line graphs of cubic graphs are 4-regular, so they make a natural test
# bed. Here we build the line graph of the Tietze graph and ask both solvers
# whether it admits an X̄-coloring.

# In[1]:

import time

from hcoloring import builtin, expand_vertex_to_triangle, line_graph, solve, solve_vertex_first, verify_witness


# The Tietze graph is the Petersen graph with one vertex blown up into a triangle.

# In[2]:

petersen = builtin("petersen")
tietze = expand_vertex_to_triangle(petersen, 0)
L = line_graph(tietze)
print(tietze.n, tietze.m, L.n, L.m, L.is_regular(4))


# The host X̄ has a degree-4 center, two degree-4 leaves joined by a triple
# edge, and two pendant leaves.

# In[3]:

xbar = builtin("xbar")
print(xbar.pairs())
print(xbar.degrees)


# Both searches must exhaust the whole space before answering no.

# In[4]:

for name, fn in (("edge-first", solve), ("vertex-first", solve_vertex_first)):
    t0 = time.perf_counter()
    w, stats = fn(L, xbar)
    print(f"{name:13s} colorable={w is not None}  nodes={stats.nodes:,}  {time.perf_counter() - t0:.1f}s")


# For contrast, the line graphs of K4 and of the cube do admit X̄-colorings,
# and the witness can be checked independently.

# In[5]:

for name in ("k4", "cube"):
    G = line_graph(builtin(name))
    w, _ = solve(G, xbar)
    print(name, verify_witness(G, xbar, w.f, w.g).ok)
