"""Shared test fixtures: presentation data for the worked examples and a
slow, independent straightening oracle.

The oracle multiplies generator words one letter at a time using only the
defining relations (term rewriting to normal order), with no knowledge of
the package's mixed-radix monomial encoding or cached structure maps.
Agreement between the two on all (or sampled) basis pairs is the main
correctness evidence for the fast multiplication.
"""

from fractions import Fraction

from hopfbead.nenciu import NenciuData
from hopfbead.scalar import field_for


# -- example presentation data (single source for the unit tests) -------

def sf2n_data(n=1):
    """2n nilpotent generators over Z_2; d = u = all-ones."""
    labels = []
    for i in range(n):
        labels += ["Z%d+" % (i + 1), "Z%d-" % (i + 1)]
    rows = [[1]] * (2 * n)
    return NenciuData([2], rows, rows, labels=labels, name="sf2_%d" % n)


def sweedler_data():
    return NenciuData([2], [[1]], [[1]], labels=["X"], name="sweedler")


def n1_data():
    d = [[1, 1]] * 4 + [[1, 0], [-1, 0]]
    u = [[1, 1]] * 4 + [[2, 1], [-2, -1]]
    labels = ["X1", "X2", "X3", "X4", "Z+", "Z-"]
    return NenciuData([4, 4], d, u, labels=labels, name="n1")


def n2_data():
    d = [[1, 1, 1], [-1, -1, -1], [0, 2, 1], [0, -2, -1]]
    u = [[1, 1, 0], [-1, -1, 0], [0, 0, 2], [0, 0, -2]]
    labels = ["X+", "X-", "Z+", "Z-"]
    return NenciuData([4, 4, 4], d, u, labels=labels, name="n2")


def n3_data():
    d = [[1, 1, 1], [-1, -1, -1], [0, 2, 1], [0, -2, -1],
         [1, 0, 1], [-1, 0, -1]]
    u = [[1, 1, 0], [-1, -1, 0], [0, 0, 2], [0, 0, -2],
         [2, 1, 0], [-2, -1, 0]]
    labels = ["X+", "X-", "Z+", "Z-", "Y+", "Y-"]
    return NenciuData([4, 4, 4], d, u, labels=labels, name="n3")


def n4_data():
    d = [[1, 1], [-1, -1]]
    u = [[1, 1], [-1, -1]]
    return NenciuData([4, 4], d, u, labels=["X+", "X-"], name="n4")


# -- slow straightening oracle ------------------------------------------

def slow_nenciu_product(data, field, word1, word2):
    """Multiply two generator words by term rewriting; words are tuples of
    letters ("K", a) or ("X", k).  Returns {normal word: Cyc coefficient}
    with normal form K_1^.. K_2^.. ... then X's ascending.
    """
    N = field.order
    m = data.m

    def xi_pow(a, e):
        return field.zeta((N // m[a]) * e % N)

    terms = {tuple(word1) + tuple(word2): field.one}
    while True:
        rewritten = False
        for word, coeff in list(terms.items()):
            for p in range(len(word) - 1):
                x, y = word[p], word[p + 1]
                repl = None  # list of (new pair or shorter, scalar)
                if x[0] == "X" and y[0] == "K":
                    # X_k K_a = xi_a^(-d_ka) K_a X_k
                    scalar = xi_pow(y[1], -data.d[x[1]][y[1]])
                    repl = [((y, x), scalar)]
                elif x[0] == "K" and y[0] == "K" and x[1] > y[1]:
                    repl = [((y, x), field.one)]
                elif x[0] == "X" and y[0] == "X" and x[1] > y[1]:
                    # X_k X_l = xi^(d_l.u_k) X_l X_k   (k > l)
                    e = data.pairing_exponent(data.d[y[1]], data.u[x[1]],
                                              N // data.root_lcm())
                    repl = [((y, x), field.zeta(e))]
                elif x[0] == "X" and y[0] == "X" and x[1] == y[1]:
                    repl = [((), field.zero)]
                if repl is not None:
                    del terms[word]
                    for newpair, scalar in repl:
                        neww = word[:p] + newpair + word[p + 2:]
                        if scalar:
                            c = terms.get(neww, field.zero) + coeff * scalar
                            if c:
                                terms[neww] = c
                            elif neww in terms:
                                del terms[neww]
                    rewritten = True
                    break
            if rewritten:
                break
        if not rewritten:
            break
    # collapse K exponents mod m and drop K^0
    out = {}
    for word, coeff in terms.items():
        if not coeff:
            continue
        kexp = [0] * data.s
        xs = []
        for letter in word:
            if letter[0] == "K":
                kexp[letter[1]] += 1
            else:
                xs.append(letter[1])
        key = (tuple(e % m[a] for a, e in enumerate(kexp)), tuple(xs))
        c = out.get(key, field.zero) + coeff
        if c:
            out[key] = c
        elif key in out:
            del out[key]
    return out


def mono_to_word(alg, i):
    """Monomial index -> generator word for the slow oracle."""
    v, r = alg.decode(i)
    word = []
    for a, e in enumerate(v):
        word += [("K", a)] * e
    for k in range(alg.t):
        if r >> k & 1:
            word.append(("X", k))
    return tuple(word)


def mono_to_key(alg, i):
    v, r = alg.decode(i)
    return (tuple(v), tuple(k for k in range(alg.t) if r >> k & 1))


def element_to_keydict(alg, el):
    return {mono_to_key(alg, m): c for m, c in el.c.items()}


def uq_slow_product(alg, i, j):
    """Slow normal-ordering oracle for the small quantum group.

    Multiplies two basis monomials as letter words, resolving one adjacent
    violation at a time using only the defining relations

        K E = q^2 E K,  K F = q^-2 F K,  F E = E F - (K - K^-1)/{1},

    with E and F letters and K carried as ("K", n) atoms with signed
    exponent.  Returns {basis index: coeff}.
    """
    field = alg.field
    rp = alg.rp
    brace = alg.qbrace(1)
    e1, f1, k1 = alg.decode(i)
    e2, f2, k2 = alg.decode(j)
    word = ("E",) * e1 + ("F",) * f1 + (("K", 1),) * k1 \
        + ("E",) * e2 + ("F",) * f2 + (("K", 1),) * k2
    out = {}
    stack = [(word, field.one)]
    while stack:
        w, c = stack.pop()
        for pos in range(len(w) - 1):
            a, b = w[pos], w[pos + 1]
            ka = isinstance(a, tuple)
            if ka and isinstance(b, tuple):
                stack.append((w[:pos] + (("K", a[1] + b[1]),) + w[pos + 2:], c))
                break
            if ka and b == "E":
                stack.append((w[:pos] + ("E", a) + w[pos + 2:],
                              c * alg.q_power(2 * a[1])))
                break
            if ka and b == "F":
                stack.append((w[:pos] + ("F", a) + w[pos + 2:],
                              c * alg.q_power(-2 * a[1])))
                break
            if a == "F" and b == "E":
                head, tail = w[:pos], w[pos + 2:]
                stack.append((head + ("E", "F") + tail, c))
                stack.append((head + (("K", 1),) + tail, -c / brace))
                stack.append((head + (("K", -1),) + tail, c / brace))
                break
        else:
            e = sum(1 for x in w if x == "E")
            f = sum(1 for x in w if x == "F")
            k = sum(x[1] for x in w if isinstance(x, tuple))
            if e < rp and f < rp:
                key = alg.encode(e, f, k)
                got = out.get(key, field.zero) + c
                if got:
                    out[key] = got
                elif key in out:
                    del out[key]
    return out
