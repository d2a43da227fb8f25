"""Regenerates the golden files by brute force, independently of the C++ code.

Run from this directory: python3 generate.py
"""
from collections import Counter


def partitions(n, max_part=None):
    """Partitions of n as non-increasing tuples, lexicographically decreasing."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for part in range(min(n, max_part), 0, -1):
        for rest in partitions(n - part, part):
            yield (part,) + rest


def in_d(p):
    # non-negative form: smallest part exactly twice, everything else distinct
    counts = Counter(p)
    if not counts:
        return True
    smallest = min(counts)
    return counts[smallest] <= 2 and all(
        m == 1 for v, m in counts.items() if v != smallest)


def in_c(p):
    if not p or p[0] % 2:
        return False
    counts = Counter(p)
    return all(m == 1 for v, m in counts.items() if v <= p[0] // 2)


def render_d(p):
    if not p:
        return "0+0"
    if Counter(p)[p[-1]] == 1:
        return "0+0+" + "+".join(map(str, p))
    return "+".join(map(str, reversed(p)))


def count(n, pred, convention=None):
    if convention is not None:
        return convention
    return sum(1 for p in partitions(n) if pred(p))


def write_series(path, values):
    with open(path, "w") as f:
        for n, v in enumerate(values):
            f.write(f"{n}\t{v}\n")


if __name__ == "__main__":
    with open("enumerate_D_7.txt", "w") as f:
        for p in partitions(7):
            if in_d(p):
                f.write(render_d(p) + "\n")
    write_series("series_D_20.tsv", [count(n, in_d) for n in range(21)])
    write_series("series_C_20.tsv",
                 [count(n, in_c, 1 if n == 0 else None) for n in range(21)])
    with open("count_D_2_8.txt", "w") as f:
        for n in range(2, 9):
            f.write(f"{n} D {count(n, in_d)}\n")
