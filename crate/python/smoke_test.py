"""Quick check that the extension imports and agrees with a few hand values.

Build first:  pip install --no-build-isolation -e crates/python
Then run:     python3 python/smoke_test.py
"""

from fractions import Fraction

import graphmag as gm
from graphmag import Graph, RationalFunction


def main():
    k3 = Graph.complete(3)
    m = gm.magnitude(k3)
    assert m == RationalFunction([3], [1, 2]), m
    assert m.evaluate(Fraction(1, 2)) == Fraction(3, 2)
    assert gm.magnitude_series(k3, 4) == [3, -6, 12, -24, 48]
    assert gm.walk_series(k3, 4) == [3, -6, 12, -24, 48]
    assert RationalFunction.from_json(m.to_json()) == m

    # |K2 x K3| = |K2| |K3|
    prod = Graph.parse("K2 * K3")
    assert gm.magnitude(prod) == gm.magnitude(Graph.complete(2)) * m

    w = gm.weighting(Graph.path(3))
    assert gm.verify_weighting(Graph.path(3), w)
    assert sum(w, 0) == gm.magnitude(Graph.path(3))

    value, components = gm.magnitude_at_one(Graph.edgeless(2) + Graph.cycle(5))
    assert components == 3 and value == 3, (value, components)

    # triangles on two adjacent square edges, versus opposite edges
    house = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3)])
    twist = gm.whitney_twist(house, 0, 3, house, 0, 3)
    assert not twist["adjacent"] and not twist["equal"]
    assert twist["mag_x"] == RationalFunction([6, 8, -2], [1, 4, 5, 2])
    assert twist["mag_y"] == RationalFunction([6, -4], [1, 2, 0, -1])

    # gluing along an edge: the twist preserves magnitude
    edge = gm.whitney_twist(Graph.path(3), 0, 1, Graph.cycle(5), 0, 1)
    assert edge["adjacent"] and edge["equal"] and edge["transform_verified"]

    two = Graph.parse("glue(C3, 0 1, C3, 0 1)")
    report = gm.check_inclusion_exclusion(two, [0, 1, 2], [0, 1, 3])
    assert not report["theorem_applies"] and not report["identity_holds"]
    report = gm.check_inclusion_exclusion(Graph.path(5), [0, 1, 2], [2, 3, 4])
    assert report["theorem_applies"] and report["identity_holds"]

    try:
        Graph(3, [(0, 0)])
    except ValueError:
        pass
    else:
        raise AssertionError("self-loop accepted")

    print("smoke test passed:", m, "|", twist["mag_y"])


if __name__ == "__main__":
    main()
