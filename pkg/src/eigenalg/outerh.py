"""Conjugation action on word tuples and the outer-ideal identities.

Ad_g conjugates every component of a tuple; the exchange identity
Ad_g(id_m) o rho = rho o Ad_h(id_n) (with h the substitution of g through
rho) is what makes conjugation-invariant functors well-defined.  H0 classes
are handled through certificates only: a bounded conjugator search that
never reports a false positive, plus the factorization through the
abelianization (exponent sums are conjugation invariants).
"""

import itertools

from .freealg import GrTuple, Word, word_inv, word_mul


def ad_action(g, t):
    """Conjugate every component: [w_1|...|w_m] -> [g w_1 g^-1|...]."""
    gi = word_inv(g)
    return GrTuple(t.n, t.m,
                   tuple(word_mul(word_mul(g, w), gi) for w in t.words))


def substitute_word(g, rho):
    """The word h with [h]_n = [g]_m o rho (g read through the tuple rho)."""
    return GrTuple(g.n, 1, (g,)).substitute(rho).words[0]


def outer_exchange_check(g, rho):
    """Check Ad_g(id_m) o rho = rho o Ad_h(id_n) for h = g read through rho.

    ``g`` is a word over m generators; ``rho`` has m words over n
    generators.  Returns (holds, h).
    """
    m, n = rho.m, rho.n
    if g.n != m:
        raise ValueError("g must live over the target generators of rho")
    h = substitute_word(g, rho)
    lhs = ad_action(g, GrTuple.identity(m)).substitute(rho)
    rhs = rho.substitute(ad_action(h, GrTuple.identity(n)))
    return lhs == rhs, h


def total_length(t):
    return sum(len(w) for w in t.words)


def local_minimize(t):
    """Greedy descent: conjugate by single generators while length drops.

    Returns (representative, conjugator) with ad_action(conjugator, t) equal
    to the representative; the result is at a local length minimum.
    """
    conj = Word.identity(t.n)
    cur = t
    improved = True
    while improved:
        improved = False
        for l in range(1, t.n + 1):
            for s in (l, -l):
                g = Word(t.n, (s,))
                cand = ad_action(g, cur)
                if total_length(cand) < total_length(cur):
                    cur = cand
                    conj = word_mul(g, conj)
                    improved = True
    return cur, conj


class ConjClassElt:
    """A combination of word tuples stored by locally-minimal representatives.

    Only certified equality is available for the underlying classes; the
    representative choice is a length-local minimum, not a canonical form.
    """

    def __init__(self, n, m, terms=None):
        self.n = n
        self.m = m
        self.terms = {}
        if terms:
            for t, c in terms.items():
                if c == 0:
                    continue
                rep, _ = local_minimize(t)
                self.terms[rep] = self.terms.get(rep, 0) + c
            self.terms = {k: c for k, c in self.terms.items() if c != 0}

    def __repr__(self):
        return " + ".join(f"{c}*{k}" for k, c in self.terms.items()) or "0"


def reduced_words(n, max_len):
    """All freely reduced words over n generators of length <= max_len."""
    out = [Word.identity(n)]
    frontier = [()]
    letters = [l for i in range(1, n + 1) for l in (i, -i)]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for l in letters:
                if w and w[-1] == -l:
                    continue
                nxt.append(w + (l,))
        for w in nxt:
            out.append(Word(n, w, reduce=False))
        frontier = nxt
    return out


def h0_equal(a, b, bound):
    """Bounded simultaneous-conjugacy certificate.

    Returns ('equal_certified', g) when some reduced conjugator g of length
    <= bound maps a to b, else ('inconclusive', bound).  Never reports a
    false positive; inconclusive does not imply the classes differ.
    """
    if (a.n, a.m) != (b.n, b.m):
        return ("inconclusive", bound)
    for g in reduced_words(a.n, bound):
        if ad_action(g, a) == b:
            return ("equal_certified", g)
    return ("inconclusive", bound)


def h0_to_abelianization(t):
    """Exponent sums per component: the induced matrix morphism key.

    Conjugation-invariant, so certified-equal tuples share the image.
    """
    return tuple(w.exponent_sums() for w in t.words)
