"""Independent brute-force oracles for frozen test values.

Plain Python with fractions and itertools; shares no code with the C++ library.
Run: python3 tests/oracles/brute_force_values.py
"""
import itertools
import math
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog


def maj(x, y, z):
    return int(x + y + z >= 2)


def det_strategies(n_inputs, n_outputs):
    return list(itertools.product(range(n_outputs), repeat=n_inputs))


def classical_average(instances, players, win):
    """players: list of (n_inputs, n_outputs, input_of(instance))."""
    spaces = [det_strategies(ni, no) for ni, no, _ in players]
    best = -1
    patterns = set()
    for combo in itertools.product(*spaces):
        wins = 0
        pat = []
        for inst in instances:
            outs = tuple(f[sel(inst)] for f, (_, _, sel) in zip(combo, players))
            w = win(inst, outs)
            wins += w
            pat.append(w)
        patterns.add(tuple(pat))
        best = max(best, wins)
    return Fraction(best, len(instances)), patterns


def worst_case_lp(patterns):
    """max v s.t. sum w = 1, sum_k w_k pat_k[j] >= v; float LP then rationalized."""
    pats = sorted(patterns)
    k = len(pats)
    m = len(pats[0])
    c = np.zeros(k + 1); c[-1] = -1
    a_ub = np.zeros((m, k + 1)); b_ub = np.zeros(m)
    for j in range(m):
        for i, p in enumerate(pats):
            a_ub[j, i] = -p[j]
        a_ub[j, -1] = 1
    a_eq = np.zeros((1, k + 1)); a_eq[0, :k] = 1
    res = linprog(c, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=[1],
                  bounds=[(0, None)] * (k + 1), method="highs")
    return Fraction(-res.fun).limit_denominator(1000)


def report(name, avg, patterns):
    print(f"{name}: average={avg} worst={worst_case_lp(patterns)}")


bit = [0, 1]

# CHSH
inst = list(itertools.product(bit, bit))
avg, pats = classical_average(inst, [(2, 2, lambda i: i[0]), (2, 2, lambda i: i[1])],
                              lambda i, o: int(o[0] ^ o[1] == (i[0] & i[1])))
report("chsh", avg, pats)

# GHZ-Mermin
inst = [x for x in itertools.product(bit, bit, bit) if x[0] ^ x[1] ^ x[2] == 0]
avg, pats = classical_average(inst, [(2, 2, lambda i, k=k: i[k]) for k in range(3)],
                              lambda i, o: int(o[0] ^ o[1] ^ o[2] == (i[0] | i[1] | i[2])))
report("ghz_mermin", avg, pats)

# Majority
inst = list(itertools.product(bit, bit, bit))
avg, pats = classical_average(inst, [(2, 2, lambda i, k=k: i[k]) for k in range(3)],
                              lambda i, o: int(o[0] ^ o[1] ^ o[2] == maj(*i)))
report("majority", avg, pats)

# Magic square, 2-bit answers completed by parity (rows even, columns odd).
def ms_win(x, y, a, b):
    row = [a >> 1 & 1, a & 1]
    row.append(row[0] ^ row[1])
    col = [b >> 1 & 1, b & 1]
    col.append(col[0] ^ col[1] ^ 1)
    return int(row[y] == col[x])

inst = list(itertools.product(range(3), range(3)))
avg, pats = classical_average(inst, [(3, 4, lambda i: i[0]), (3, 4, lambda i: i[1])],
                              lambda i, o: ms_win(i[0], i[1], o[0], o[1]))
report("magic_square", avg, pats)

# Pentagram incidence (nodes P0..P4 = 0..4, I0..I4 = 5..9).
P = lambda k: k
I = lambda k: 5 + k
EDGES = [
    [P(0), I(0), I(1), P(2)],
    [P(1), I(1), I(2), P(3)],
    [P(2), I(2), I(3), P(4)],
    [P(3), I(3), I(4), P(0)],
    [P(4), I(4), I(0), P(1)],  # Bob: b1=P4, b2=I4, b3=I0, P1 parity-determined
]
# node of Alice_i for input bit
ALICE_NODE = [{0: I(2), 1: P(0)}, {0: P(3), 1: P(2)}, {0: I(1), 1: I(3)}]
BOB_SLOTS = [P(4), I(4), I(0)]


def alices_edge(x):
    nodes = {ALICE_NODE[k][x[k]] for k in range(3)}
    for e, edge in enumerate(EDGES[:4]):
        if nodes <= set(edge):
            return e, [n for n in edge if n not in nodes][0]
    raise ValueError


def pent_parity(x, c):
    return (c[0] & (1 - x[0])) ^ (c[1] & (1 - x[1])) ^ (c[2] & (1 - x[2]))


def pent_win(x, a, b, c):
    _, inter = alices_edge(x)
    bb = [b >> 2 & 1, b >> 1 & 1, b & 1]
    if inter == P(1):
        v = bb[0] ^ bb[1] ^ bb[2] ^ 1
    else:
        v = bb[BOB_SLOTS.index(inter)]
    return int(a[0] ^ a[1] ^ a[2] ^ v == pent_parity(x, c))


pent_inst = [x for x in itertools.product(bit, bit, bit) if x[0] ^ x[1] ^ x[2] == 0]
for c in itertools.product(bit, bit, bit):
    avg, pats = classical_average(
        pent_inst,
        [(2, 2, lambda i, k=k: i[k]) for k in range(3)] + [(1, 8, lambda i: 0)],
        lambda i, o, c=c: pent_win(i, o[:3], o[3], c))
    # 2^10 node labelling check
    sat = 0
    req = {1: c[0] ^ c[1] ^ c[2], 2: c[0], 3: c[1], 0: c[2], 4: 1}
    for lab in itertools.product(bit, repeat=10):
        if all(sum(lab[n] for n in EDGES[e]) % 2 == req[e] for e in range(5)):
            sat += 1
    report(f"pentagram_tailored{c} (satisfying labellings={sat})", avg, pats)

# Main game: Alices 2->2, Bob z->8, Charlie z->8; 262144 strategies.
main_inst = [x + (0,) for x in pent_inst] + [(1, 1, 1, 1)]


def main_win(i, o):
    x, z = i[:3], i[3]
    a, b, c = o[:3], o[3], o[4]
    cb = (c >> 2 & 1, c >> 1 & 1, c & 1)
    if z == 0:
        return pent_win(x, a, b, cb)
    bb = (b >> 2 & 1, b >> 1 & 1, b & 1)
    return int(all(a[k] == bb[k] == cb[k] for k in range(3)))


avg, pats = classical_average(
    main_inst,
    [(2, 2, lambda i, k=k: i[k]) for k in range(3)] + [(2, 8, lambda i: i[3])] * 2,
    main_win)
report("main_game", avg, pats)

# Equality3
avg, pats = classical_average([(0, 0, 0)], [(1, 2, lambda i: 0)] * 3,
                              lambda i, o: int(o[0] == o[1] == o[2]))
report("equality3", avg, pats)

print("cos^2(pi/8) =", repr(math.cos(math.pi / 8) ** 2))
for p in [Fraction(1, 10), Fraction(1, 3), Fraction(1, 2), Fraction(9, 10)]:
    print(f"p={p}: p^2+(1-p)^2 = {p * p + (1 - p) ** 2}")


# Magic square + equality. Full enumeration is out of reach (4^24 Bob
# tables), so this oracle reasons per Charlie answer c0 at z=0 instead of per
# best response: Bob inputs with (y1, y2) != c0 win outright, the z=1 rows
# win iff Alice's row-1 answer, Bob's z=1 answers and Charlie's z=1 answer all
# agree, and the remaining 9 instances are a plain magic square.
def combo_average():
    best = 0
    ms_inst = list(itertools.product(range(3), range(3)))
    ms_best = max(
        sum(ms_win(x, y, fa[x], fb[y]) for x, y in ms_inst)
        for fa in det_strategies(3, 4) for fb in det_strategies(3, 4))
    # z=0: 36 instances, 27 automatic wins (3 values of (y1,y2) != c0).
    # z=1: 12 instances, all winnable with constant answers.
    best = 27 + ms_best + 12
    return Fraction(best, 48)


print(f"square_equality_combo: average={combo_average()}")
