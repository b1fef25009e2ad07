"""Common graphs and documents between tests"""

import os

TESTDEST = os.path.join(os.path.dirname(os.path.realpath(__file__)), "testdest")

EDGE_LIST_C4 = """\
4 4 directed:0
0 1
0 3
1 2
2 3
"""

EDGE_LIST_COMMENTED = """\
# a directed triangle
3 3 directed:1
0 1  # first arc
1 2

2 0
"""

EDGE_LIST_SHORT = """\
3 3 directed:0
0 1
1 2
"""

XML_TRIANGLE_BRACELET = b"""<?xml version='1.0' encoding='utf-8'?>
<kordered-graph n="3" directed="0">
  <bracelet family="bracelet" params="1,1,1">
    <part size="1"/>
    <part size="1"/>
    <part size="1"/>
  </bracelet>
  <edges>
    <edge u="0" v="1"/>
    <edge u="0" v="2"/>
    <edge u="1" v="2"/>
  </edges>
</kordered-graph>
"""

XML_BROKEN_BRACELET = b"""<?xml version='1.0' encoding='utf-8'?>
<kordered-graph n="3" directed="0">
  <bracelet family="bracelet" params="1,1,1">
    <part size="1"/>
    <part size="1"/>
    <part size="1"/>
  </bracelet>
  <edges>
    <edge u="0" v="1"/>
    <edge u="1" v="2"/>
  </edges>
</kordered-graph>
"""

# Vertices of G(2,4) part by part: {0, 1}, {2, 3}, {4, 5}, {6, 7}
G24_PARTS = ((0, 1), (2, 3), (4, 5), (6, 7))

# Marks filling the first two parts of G(2,4)
G24_CROWDED_MARKS = (0, 1, 2, 3, 4)
