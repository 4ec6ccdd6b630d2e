#!/usr/bin/env python3
"""Looks for larger planar (n,m)-complete graphs than exhaustive search can reach.

Random walk over planar triangulations (edge flips) and adjacency labels, minimising the number of
pairs that do not see each other. Found graphs are written as .nmg files; they are evidence only
after `nmg verify-corpus` has certified them.
"""

import argparse
import random
import sys

import networkx as nx


def reverse(label, n):
    if label <= 2 * n:
        return label - 1 if label % 2 == 0 else label + 1
    return label


def non_seeing(g, lab, n):
    count = 0
    nodes = list(g.nodes)
    for i, u in enumerate(nodes):
        nu = g[u]
        for v in nodes[i + 1:]:
            if v in nu:
                continue
            seen = False
            for w in nu:
                if w in g[v] and lab[(u, w)] != lab[(v, w)]:
                    seen = True
                    break
            if not seen:
                count += 1
    return count


def stacked_triangulation(order, rng):
    g = nx.Graph([(0, 1), (1, 2), (0, 2)])
    faces = [(0, 1, 2), (0, 1, 2)]
    for v in range(3, order):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        g.add_edges_from([(a, v), (b, v), (c, v)])
        faces += [(a, b, v), (b, c, v), (a, c, v)]
    return g


def flip(g, rng):
    """Replaces a random edge uv by the other diagonal ab of its two faces, if that keeps a triangulation."""
    u, v = rng.choice(list(g.edges))
    planar, emb = nx.check_planarity(g)
    a = emb[u][v]["cw"]
    b = emb[u][v]["ccw"]
    if a == b or g.has_edge(a, b) or g.degree(u) <= 3 or g.degree(v) <= 3:
        return None
    h = g.copy()
    h.remove_edge(u, v)
    h.add_edge(a, b)
    if not nx.check_planarity(h)[0]:
        return None
    return h, (u, v), (a, b)


def set_label(lab, u, v, label, n):
    lab[(u, v)] = label
    lab[(v, u)] = reverse(label, n)


def search(n, m, order, steps, rng):
    p = 2 * n + m
    g = stacked_triangulation(order, rng)
    lab = {}
    for u, v in g.edges:
        set_label(lab, u, v, rng.randint(1, p), n)
    score = non_seeing(g, lab, n)
    temperature = 1.0
    for step in range(steps):
        if score == 0:
            return g, lab
        temperature = max(0.05, 1.0 - step / steps)
        if rng.random() < 0.2:
            moved = flip(g, rng)
            if moved is None:
                continue
            h, old, new = moved
            hl = dict(lab)
            hl.pop(old, None)
            hl.pop(old[::-1], None)
            set_label(hl, new[0], new[1], rng.randint(1, p), n)
        else:
            u, v = rng.choice(list(g.edges))
            h, hl = g, dict(lab)
            set_label(hl, u, v, rng.randint(1, p), n)
        candidate = non_seeing(h, hl, n)
        if candidate <= score or rng.random() < pow(2.718, (score - candidate) / temperature):
            g, lab, score = h, hl, candidate
    return None


def write_nmg(path, g, lab, n, m):
    lines = []
    for u, v in sorted(tuple(sorted(e)) for e in g.edges):
        label = lab[(u, v)]
        if label <= 2 * n and label % 2 == 1:
            lines.append((v, u, label + 1))
        else:
            lines.append((u, v, label))
    with open(path, "w") as out:
        out.write(f"nmg {n} {m} {g.number_of_nodes()} {len(lines)}\n")
        for u, v, label in lines:
            out.write(f"{u} {v} {label}\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--m", type=int, required=True)
    parser.add_argument("--order", type=int, required=True)
    parser.add_argument("--steps", type=int, default=20000)
    parser.add_argument("--restarts", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", required=True)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    for attempt in range(args.restarts):
        found = search(args.n, args.m, args.order, args.steps, rng)
        if found:
            write_nmg(args.out, *found, args.n, args.m)
            print(f"found after {attempt + 1} restarts: {args.out}")
            return 0
    print("nothing found", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
