"""Print the truncated mesh-quiver dimension table and its (degree, dim) profile."""
import argparse
from collections import Counter

from liekoszul.meshquiver import build_mesh_quiver, hom_dimensions


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=4)
    depth = ap.parse_args().depth
    q = build_mesh_quiver(depth)
    print(q.ascii())
    table = hom_dimensions(q)
    prof = Counter((q.path_degree(v, w), d) for (v, w), d in table.items() if d)
    print()
    for (deg, dim), n in sorted(prof.items()):
        print(f"degree {deg}: {n} pairs of dimension {dim}")


if __name__ == "__main__":
    main()
