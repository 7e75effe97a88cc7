# coding: utf-8

# # Stars as hosts

# Coloring a k-regular graph with the star K1,k as host is the same as a
# proper k-edge-coloring: every vertex must go to the center and see all k
# colors. Snarks such as the Petersen graph are exactly the cubic graphs that
# fail this.

# In[1]:

from hcoloring import builtin, chromatic_index, is_k_edge_colorable, line_graph, solve

cubic = ["k4", "cube", "petersen", "tietze"]
for name in cubic:
    G = builtin(name)
    print(f"{name:9s} chi'={chromatic_index(G)}  K1,3-colorable={solve(G, builtin('k1k', 3))[0] is not None}")


# The same holds one degree up.

# In[2]:

quartic = {"k5": builtin("k5"), "octahedron": builtin("octahedron"),
           "L(k4)": line_graph(builtin("k4")), "L(tietze)": line_graph(builtin("tietze"))}
for name, G in quartic.items():
    print(f"{name:10s} 4-edge-colorable={is_k_edge_colorable(G, 4) is not None}  "
          f"K1,4-colorable={solve(G, builtin('k1k', 4))[0] is not None}")
