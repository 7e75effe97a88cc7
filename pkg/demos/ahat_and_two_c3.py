# coding: utf-8

# # Weaker hosts: Â and the doubled triangle

# Â and 2C₃ color more graphs than X̄. The line graph of the Tietze graph
# fails X̄ but passes both of these hosts.

# In[1]:

from hcoloring import builtin, find_ecd_of_size_at_most, line_graph, solve, validate_decomposition, verify_witness

L = line_graph(builtin("tietze"))


# In[2]:

for host in ("ahat", "two_c3"):
    H = builtin(host)
    w, stats = solve(L, H)
    print(host, "colorable" if w else "uncolorable", stats.nodes, verify_witness(L, H, w.f, w.g).ok)


# A 2C₃-coloring of a 4-regular graph is the same thing as a decomposition of
# its edges into even cycles, colored with three colors so that cycles meeting
# at a vertex get different colors. We can find one directly.

# In[3]:

D = find_ecd_of_size_at_most(L, 3)
print(len(D.cycles), "cycles with colors", D.colors)
print(validate_decomposition(L, D))  # None means valid


# The cycles of a single color class are vertex-disjoint.

# In[4]:

for c in range(3):
    sets = [s for s, col in zip(D.vertex_sets(L), D.colors) if col == c]
    print(c, [len(s) for s in sets], sum(len(s) for s in sets) == len(set().union(*sets)))


# K5 has no such decomposition, and correspondingly it is not 2C₃-colorable.

# In[5]:

K5 = builtin("k5")
print(find_ecd_of_size_at_most(K5, 3), solve(K5, builtin("two_c3"))[0])
