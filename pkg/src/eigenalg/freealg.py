"""Free groups, Magnus expansions, Hall sets and primitive parts.

Words are freely reduced sequences of signed generator indices (+i for x_i,
-i for x_i^{-1}).  TensorPoly is a truncated element of the tensor algebra
k<X_1..X_n> tensored m times; CommPolyTrunc is its commutative analogue.
HallTree realizes the free-Lie-algebra basis of binary trees under a fixed
admissible order.
"""

import itertools
import threading
from fractions import Fraction

from .exactla import Mat, Subspace, intersect_many, kernel


class GeneratorMismatch(ValueError):
    """Operands live over different generator sets."""


class IndexOutOfRange(ValueError):
    """A tensor-factor index is out of range."""


class OrderViolation(RuntimeError):
    """A constructed Hall pair violates the fixed tree order (should not happen)."""


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

def reduce_letters(letters):
    """Freely reduce a sequence of signed letters."""
    out = []
    for l in letters:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


class Word:
    """A freely reduced word in the free group on n generators."""

    __slots__ = ("n", "letters")

    def __init__(self, n, letters=(), reduce=True):
        self.n = n
        letters = tuple(letters)
        for l in letters:
            if l == 0 or abs(l) > n:
                raise GeneratorMismatch(f"letter {l} outside 1..{n}")
        self.letters = reduce_letters(letters) if reduce else letters

    @classmethod
    def gen(cls, n, i):
        return cls(n, (i,))

    @classmethod
    def identity(cls, n):
        return cls(n, ())

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.n == other.n \
            and self.letters == other.letters

    def __hash__(self):
        return hash((self.n, self.letters))

    def __repr__(self):
        if not self.letters:
            return "e"
        return "".join(f"x{l}" if l > 0 else f"x{-l}^-1" for l in self.letters)

    def exponent_sums(self):
        """Abelianization: the vector of exponent sums in Z^n."""
        v = [0] * self.n
        for l in self.letters:
            v[abs(l) - 1] += 1 if l > 0 else -1
        return tuple(v)


def word_mul(a, b):
    if a.n != b.n:
        raise GeneratorMismatch("different generator counts")
    return Word(a.n, a.letters + b.letters)


def word_inv(a):
    return Word(a.n, tuple(-l for l in reversed(a.letters)), reduce=False)


class GrTuple:
    """An m-tuple of words over n generators: the morphism [w_1|...|w_m]_n."""

    __slots__ = ("n", "m", "words")

    def __init__(self, n, m, words):
        words = tuple(words)
        if len(words) != m:
            raise GeneratorMismatch("tuple length != m")
        for w in words:
            if w.n != n:
                raise GeneratorMismatch("word over wrong generator count")
        self.n = n
        self.m = m
        self.words = words

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(Word.gen(n, i + 1) for i in range(n)))

    def __eq__(self, other):
        return isinstance(other, GrTuple) and self.n == other.n \
            and self.m == other.m and self.words == other.words

    def __hash__(self):
        return hash((self.n, self.m, self.words))

    def __repr__(self):
        return "[" + "|".join(repr(w) for w in self.words) + f"]_{self.n}"

    def substitute(self, inner):
        """Compose tuples: each generator x_j of self is replaced by inner.words[j].

        self is an m-tuple over n generators; inner must be an n-tuple over p
        generators; the result is an m-tuple over p generators.
        """
        if inner.m != self.n:
            raise GeneratorMismatch("tuples not composable")
        p = inner.n
        out = []
        for w in self.words:
            letters = []
            for l in w.letters:
                piece = inner.words[abs(l) - 1]
                letters.extend(piece.letters if l > 0
                               else word_inv(piece).letters)
            out.append(Word(p, letters))
        return GrTuple(p, self.m, out)


# ---------------------------------------------------------------------------
# truncated tensor algebra
# ---------------------------------------------------------------------------

class TensorPoly:
    """A truncated element of k<X_1..X_n>^{tensor m}.

    Monomials are m-tuples of tuples of positive letter indices; only total
    degree <= D is stored.  Coefficients are Fractions (or field scalars).
    """

    __slots__ = ("n", "m", "D", "coeffs")

    def __init__(self, n, m, D, coeffs=None):
        self.n = n
        self.m = m
        self.D = D
        self.coeffs = {}
        if coeffs:
            for mono, c in coeffs.items():
                if c != 0 and sum(len(f) for f in mono) <= D:
                    self.coeffs[mono] = self.coeffs.get(mono, 0) + c
            self.coeffs = {k: v for k, v in self.coeffs.items() if v != 0}

    @classmethod
    def unit(cls, n, m, D):
        return cls(n, m, D, {tuple(() for _ in range(m)): Fraction(1)})

    @classmethod
    def zero(cls, n, m, D):
        return cls(n, m, D)

    def copy(self):
        p = TensorPoly(self.n, self.m, self.D)
        p.coeffs = dict(self.coeffs)
        return p

    def __eq__(self, other):
        return isinstance(other, TensorPoly) and (self.n, self.m, self.D) == \
            (other.n, other.m, other.D) and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for mono, c in sorted(self.coeffs.items()):
            factors = "(x)".join(
                ("".join(f"X{l}" for l in f) or "1") for f in mono)
            bits.append(f"{c}*{factors}")
        return " + ".join(bits)

    def add(self, other, scale=1):
        self._check(other)
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            out[mono] = out.get(mono, 0) + scale * c
        p = TensorPoly(self.n, self.m, self.D)
        p.coeffs = {k: v for k, v in out.items() if v != 0}
        return p

    def scale(self, c):
        p = TensorPoly(self.n, self.m, self.D)
        if c != 0:
            p.coeffs = {k: c * v for k, v in self.coeffs.items()}
        return p

    def mul(self, other):
        """Factorwise concatenation product, truncated at total degree D."""
        self._check(other)
        out = {}
        for ma, ca in self.coeffs.items():
            da = sum(len(f) for f in ma)
            for mb, cb in other.coeffs.items():
                if da + sum(len(f) for f in mb) > self.D:
                    continue
                mono = tuple(ma[j] + mb[j] for j in range(self.m))
                out[mono] = out.get(mono, 0) + ca * cb
        p = TensorPoly(self.n, self.m, self.D)
        p.coeffs = {k: v for k, v in out.items() if v != 0}
        return p

    def is_multilinear(self):
        """Every stored monomial uses each letter at most once (globally)."""
        for mono in self.coeffs:
            seen = set()
            for f in mono:
                for l in f:
                    if l in seen:
                        return False
                    seen.add(l)
        return True

    def _check(self, other):
        if (self.n, self.m, self.D) != (other.n, other.m, other.D):
            raise GeneratorMismatch("tensor algebra parameters differ")


def tensor_product(polys, D):
    """External tensor product of single-or-multi-factor polys, truncated."""
    n = polys[0].n
    m = sum(p.m for p in polys)
    out = TensorPoly.unit(n, 0, D)
    acc = {(): Fraction(1)}
    for p in polys:
        nxt = {}
        for mono, c in acc.items():
            deg = sum(len(f) for f in mono)
            for mb, cb in p.coeffs.items():
                if deg + sum(len(f) for f in mb) <= D:
                    nxt[mono + mb] = nxt.get(mono + mb, 0) + c * cb
        acc = nxt
    res = TensorPoly(n, m, D)
    res.coeffs = {k: v for k, v in acc.items() if v != 0}
    return res


def magnus(w, D):
    """Magnus expansion x_i -> 1 + X_i, truncated at degree D."""
    out = TensorPoly.unit(w.n, 1, D)
    for l in w.letters:
        i = abs(l)
        if l > 0:
            f = TensorPoly(w.n, 1, D, {((),): Fraction(1), ((i,),): Fraction(1)})
        else:
            coeffs = {}
            for k in range(D + 1):
                coeffs[((i,) * k,)] = Fraction((-1) ** k)
            f = TensorPoly(w.n, 1, D, coeffs)
        out = out.mul(f)
    return out


def magnus_tuple(t, D):
    """Factorwise Magnus expansion of a GrTuple, truncated at total degree D."""
    return tensor_product([magnus(w, D) for w in t.words], D) if t.m \
        else TensorPoly.unit(t.n, 0, D)


class CommPolyTrunc:
    """A truncated polynomial in n commuting variables, total degree <= D."""

    __slots__ = ("n", "D", "coeffs")

    def __init__(self, n, D, coeffs=None):
        self.n = n
        self.D = D
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                if c != 0 and sum(e) <= D:
                    self.coeffs[e] = self.coeffs.get(e, 0) + c
            self.coeffs = {k: v for k, v in self.coeffs.items() if v != 0}

    @classmethod
    def unit(cls, n, D):
        return cls(n, D, {(0,) * n: Fraction(1)})

    def __eq__(self, other):
        return isinstance(other, CommPolyTrunc) and (self.n, self.D) == \
            (other.n, other.D) and self.coeffs == other.coeffs

    def __repr__(self):
        return " + ".join(f"{c}*t^{e}" for e, c in sorted(self.coeffs.items())) \
            or "0"

    def mul(self, other):
        out = {}
        for ea, ca in self.coeffs.items():
            da = sum(ea)
            for eb, cb in other.coeffs.items():
                if da + sum(eb) > self.D:
                    continue
                e = tuple(ea[i] + eb[i] for i in range(self.n))
                out[e] = out.get(e, 0) + ca * cb
        return CommPolyTrunc(self.n, self.D, out)

    def add(self, other, scale=1):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + scale * c
        return CommPolyTrunc(self.n, self.D, out)


def abelian_magnus(v, D):
    """v in Z^n  ->  prod_i (1+t_i)^{v_i}, truncated at total degree D."""
    n = len(v)
    out = CommPolyTrunc.unit(n, D)
    for i, e in enumerate(v):
        if e == 0:
            continue
        if e > 0:
            base = CommPolyTrunc(n, D, {(0,) * n: Fraction(1),
                                        _unit_exp(n, i): Fraction(1)})
            for _ in range(e):
                out = out.mul(base)
        else:
            # (1+t)^{-1} = 1 - t + t^2 - ... truncated
            coeffs = {}
            for k in range(D + 1):
                exp = [0] * n
                exp[i] = k
                coeffs[tuple(exp)] = Fraction((-1) ** k)
            inv = CommPolyTrunc(n, D, coeffs)
            for _ in range(-e):
                out = out.mul(inv)
    return out


def _unit_exp(n, i):
    e = [0] * n
    e[i] = 1
    return tuple(e)


# ---------------------------------------------------------------------------
# Hopf operations on multilinear tensor polys
# ---------------------------------------------------------------------------

def _check_factor(p, j, hi):
    if not 1 <= j <= hi:
        raise IndexOutOfRange(f"factor index {j} outside 1..{hi}")


def comul_reduced(p, j):
    """Apply the reduced comultiplication to factor j: m factors -> m+1.

    On a multilinear word u the full coproduct is the sum over order-preserving
    splits of the letters into two subwords; the reduced version drops the two
    trivial splits.
    """
    _check_factor(p, j, p.m)
    out = TensorPoly(p.n, p.m + 1, p.D)
    acc = {}
    for mono, c in p.coeffs.items():
        u = mono[j - 1]
        k = len(u)
        if k == 0:
            # the unit is not primitive: reduced coproduct of 1 is -(1 x 1)
            nm = mono[:j - 1] + ((), ()) + mono[j:]
            acc[nm] = acc.get(nm, 0) - c
            continue
        for r in range(1, k):
            for left_idx in itertools.combinations(range(k), r):
                left = tuple(u[i] for i in left_idx)
                right = tuple(u[i] for i in range(k) if i not in left_idx)
                nm = mono[:j - 1] + (left, right) + mono[j:]
                acc[nm] = acc.get(nm, 0) + c
    out.coeffs = {k: v for k, v in acc.items() if v != 0}
    return out


def multiply_factors(p, j):
    """Concatenate factors j and j+1: m factors -> m-1."""
    _check_factor(p, j, p.m - 1)
    out = TensorPoly(p.n, p.m - 1, p.D)
    acc = {}
    for mono, c in p.coeffs.items():
        nm = mono[:j - 1] + (mono[j - 1] + mono[j],) + mono[j + 1:]
        acc[nm] = acc.get(nm, 0) + c
    out.coeffs = {k: v for k, v in acc.items() if v != 0}
    return out


def antipode_factor(p, j):
    """Antipode on factor j: reverse the word, sign (-1)^length."""
    _check_factor(p, j, p.m)
    out = TensorPoly(p.n, p.m, p.D)
    acc = {}
    for mono, c in p.coeffs.items():
        u = mono[j - 1]
        nm = mono[:j - 1] + (tuple(reversed(u)),) + mono[j:]
        acc[nm] = acc.get(nm, 0) + c * ((-1) ** len(u))
    out.coeffs = {k: v for k, v in acc.items() if v != 0}
    return out


def counit_factor(p, j):
    """Counit on factor j: keep terms where factor j is empty, drop the factor."""
    _check_factor(p, j, p.m)
    out = TensorPoly(p.n, p.m - 1, p.D)
    acc = {}
    for mono, c in p.coeffs.items():
        if mono[j - 1] == ():
            nm = mono[:j - 1] + mono[j:]
            acc[nm] = acc.get(nm, 0) + c
    out.coeffs = {k: v for k, v in acc.items() if v != 0}
    return out


def insert_unit_factor(p, j):
    """Insert an empty tensor factor at position j: m factors -> m+1."""
    _check_factor(p, j, p.m + 1)
    out = TensorPoly(p.n, p.m + 1, p.D)
    out.coeffs = {mono[:j - 1] + ((),) + mono[j - 1:]: c
                  for mono, c in p.coeffs.items()}
    return out


# ---------------------------------------------------------------------------
# Hall trees
# ---------------------------------------------------------------------------

class HallTree:
    """A binary tree over letters satisfying the Hall condition.

    The fixed total order: t < u iff |t| > |u|, ties broken by the structural
    encoding (leaf -> (0, letter), node -> (1, enc(left), enc(right)))
    compared lexicographically.  Since a tree is strictly larger in degree
    than its right subtree, t < t'' holds for every pair, which the
    constructor still asserts (OrderViolation otherwise).
    """

    __slots__ = ("letter", "left", "right", "degree", "_enc", "_delta")

    def __init__(self, letter=None, left=None, right=None):
        if letter is not None:
            self.letter = letter
            self.left = self.right = None
            self.degree = 1
            self._enc = (0, letter)
            self._delta = {letter: 1}
        else:
            self.letter = None
            self.left = left
            self.right = right
            self.degree = left.degree + right.degree
            self._enc = (1, left._enc, right._enc)
            self._delta = dict(left._delta)
            for k, v in right._delta.items():
                self._delta[k] = self._delta.get(k, 0) + v
            if not tree_precedes(self, right):
                raise OrderViolation("constructed pair violates t < t''")

    @property
    def is_leaf(self):
        return self.letter is not None

    def multidegree(self):
        return dict(self._delta)

    def order_key(self):
        return (-self.degree, self._enc)

    def __eq__(self, other):
        return isinstance(other, HallTree) and self._enc == other._enc

    def __hash__(self):
        return hash(self._enc)

    def __repr__(self):
        if self.is_leaf:
            return f"x{self.letter}"
        return f"({self.left!r},{self.right!r})"


def tree_precedes(a, b):
    """The fixed total order on trees: a < b."""
    return a.order_key() < b.order_key()


def is_hall_pair(left, right):
    """May (left, right) form a Hall tree (given both are Hall)?"""
    if not tree_precedes(left, right):
        return False
    if left.is_leaf:
        return True
    # left = (l', l''): require l'' >= right, i.e. not l'' < right
    return not tree_precedes(left.right, right)


_hall_lock = threading.Lock()
_hall_memo = {}


def hall_set(delta):
    """All Hall trees of the given multidegree {letter: count}.

    Returns a sorted (by the fixed order) list; results are memoized.
    """
    key = tuple(sorted((k, v) for k, v in delta.items() if v))
    with _hall_lock:
        if key in _hall_memo:
            return list(_hall_memo[key])
    total = sum(v for _, v in key)
    if total == 0:
        result = []
    elif total == 1:
        result = [HallTree(letter=key[0][0])]
    else:
        found = set()
        result = []
        # split delta into delta' + delta'' over all proper sub-multidegrees
        letters = [k for k, _ in key]
        counts = [v for _, v in key]
        ranges = [range(c + 1) for c in counts]
        for sub in itertools.product(*ranges):
            s = sum(sub)
            if s == 0 or s == total:
                continue
            dl = {letters[i]: sub[i] for i in range(len(letters)) if sub[i]}
            dr = {letters[i]: counts[i] - sub[i]
                  for i in range(len(letters)) if counts[i] - sub[i]}
            for tl in hall_set(dl):
                for tr in hall_set(dr):
                    if is_hall_pair(tl, tr):
                        t = HallTree(left=tl, right=tr)
                        if t not in found:
                            found.add(t)
                            result.append(t)
        result.sort(key=HallTree.order_key)
    with _hall_lock:
        _hall_memo[key] = list(result)
    return result


def hall_expand(t, n=None, D=None):
    """Expand the Lie monomial of a (Hall) tree in the tensor algebra.

    Works for arbitrary binary trees, not only Hall ones; the result is a
    single-factor TensorPoly over max-letter (or given n) letters.
    """
    if n is None:
        n = max(t._delta)
    if D is None:
        D = t.degree
    if t.is_leaf:
        return TensorPoly(n, 1, D, {((t.letter,),): Fraction(1)})
    a = hall_expand(t.left, n, D)
    b = hall_expand(t.right, n, D)
    return a.mul(b).add(b.mul(a), scale=-1)


# ---------------------------------------------------------------------------
# the multilinear component and its primitive part
# ---------------------------------------------------------------------------

def multilinear_basis(m, letters):
    """Basis of the component of k<X>^{tensor m} using each letter exactly once.

    Returns a sorted list of m-tuples of letter-index tuples.
    """
    letters = tuple(sorted(letters))
    out = []
    for assign in itertools.product(range(m), repeat=len(letters)):
        groups = [[] for _ in range(m)]
        for l, slot in zip(letters, assign):
            groups[slot].append(l)
        for perms in itertools.product(
                *[itertools.permutations(g) for g in groups]):
            out.append(tuple(tuple(p) for p in perms))
    return sorted(set(out))


def poly_to_vector(p, basis_index, field):
    v = [field.zero] * len(basis_index)
    for mono, c in p.coeffs.items():
        v[basis_index[mono]] = field.of(c)
    return v


def primitive_part(m, n, delta, field=None):
    """The joint kernel of all reduced-comultiplication insertions.

    ``delta`` is a multidegree with values in {0,1}; the computation happens
    in the finite delta-component of k<X_n>^{tensor m}.  Returns (Subspace,
    basis list of monomials).
    """
    from .exactla import QQ
    if field is None:
        field = QQ
    letters = sorted(l for l, v in delta.items() if v)
    if any(v not in (0, 1) for v in delta.values()):
        raise ValueError("primitive_part needs a multilinear multidegree")
    basis = multilinear_basis(m, letters)
    index = {b: i for i, b in enumerate(basis)}
    D = len(letters)
    target = multilinear_basis(m + 1, letters)
    tindex = {b: i for i, b in enumerate(target)}
    kernels = []
    for j in range(1, m + 1):
        rows = []
        for b in basis:
            p = TensorPoly(n, m, D, {b: Fraction(1)})
            q = comul_reduced(p, j)
            rows.append(poly_to_vector(q, tindex, field))
        # operator matrix has shape (target) x (basis); rows are images
        mat = Mat.from_rows(field, rows, cols=len(target)).transpose() \
            if rows else Mat.zero(field, len(target), 0)
        kernels.append(kernel(mat))
    space = intersect_many(kernels, field, len(basis))
    return space, basis
