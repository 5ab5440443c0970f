"""Exact enumeration of weighted words, lattice paths, and rooted trees.

These enumerators are the independent oracles for the algebra modules: a
letter i carries weight i - 1, and the words of length n and weight -(k+1)
whose proper prefixes stay >= -k are exactly the monomials of the k-th
coefficient of the n-th mirror polynomial.  Words of weight -1 (every proper
prefix >= 0) factor trees, balanced parentheses, and the cyclic rearrangement
argument behind the reversion coefficient formula.  Motzkin paths weighted by
level/descent height reproduce continued-fraction coefficients, and the
non-intersecting path sum reproduces Hankel minors.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations
from math import comb

from .errors import BadRange, InstanceTooLarge, NotFactorizable
from .rings import MultiPoly
from .series import TruncatedSeries
from .transforms import JFraction

Word = tuple  # letters are nonnegative integers


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def motzkin_number(n: int) -> int:
    values = [1, 1]
    while len(values) <= n:
        m = len(values)
        nxt = values[m - 1] + sum(values[k] * values[m - 2 - k] for k in range(m - 1))
        values.append(nxt)
    return values[n]


def word_weight(word: Word) -> int:
    return sum(word) - len(word)


def is_lukasiewicz(word: Word) -> bool:
    """Weight -1 with every proper prefix of weight >= 0 (last letter is 0)."""
    if not word:
        return False
    running = 0
    for letter in word[:-1]:
        running += letter - 1
        if running < 0:
            return False
    return running + word[-1] - 1 == -1


def enum_words(n: int, k: int) -> list[Word]:
    """Words of length n, weight -(k+1), proper prefixes >= -k.

    These are exactly the words appearing in the k-th coefficient of the
    n-th mirror polynomial; for k = 0 they are the Lukasiewicz words.
    """
    if n < 1 or k < 0:
        raise BadRange("need n >= 1 and k >= 0")
    target = n - k - 1  # required letter sum
    if target < 0:
        return []
    out: list[Word] = []
    prefix: list[int] = []

    def extend(position: int, running_sum: int):
        if position == n:
            if running_sum == target:
                out.append(tuple(prefix))
            return
        for letter in range(target - running_sum + 1):
            # prefix weight >= -k must hold for every proper prefix
            weight = running_sum + letter - (position + 1)
            if position + 1 < n and weight < -k:
                continue
            if position + 1 == n and running_sum + letter != target:
                continue
            prefix.append(letter)
            extend(position + 1, running_sum + letter)
            prefix.pop()

    extend(0, 0)
    return out


def lukasiewicz_words(n: int) -> list[Word]:
    return enum_words(n, 0)


def factorize_lukasiewicz(word: Word) -> list[Word]:
    """Split a word of weight -(k+1) into its k+1 Lukasiewicz factors.

    Each factor is the shortest prefix of what remains that reaches relative
    weight -1; the factorization is unique.  Raises NotFactorizable when the
    word does not satisfy the prefix conditions.
    """
    if not word:
        raise NotFactorizable("empty word")
    k_plus_1 = -word_weight(word)
    if k_plus_1 < 1:
        raise NotFactorizable(f"weight {word_weight(word)} is not negative")
    factors = []
    start = 0
    running = 0
    floor = 0
    for i, letter in enumerate(word):
        running += letter - 1
        if running == floor - 1:
            factors.append(word[start : i + 1])
            start = i + 1
            floor -= 1
        elif running < floor - 1:
            raise NotFactorizable("prefix drops too fast")
    if start != len(word) or len(factors) != k_plus_1:
        raise NotFactorizable("word does not close into whole factors")
    return factors


def _rotation(word: Word, start: int) -> Word:
    """Rotation beginning at 0-based position start."""
    return word[start:] + word[:start]


def cyclic_to_product(k_prime: int, word: Word) -> tuple[int, Word]:
    """The rearrangement map behind the coefficient formula.

    Input: 1 <= k_prime <= k+1 and a word of length n, weight -(k+1), with no
    prefix condition.  Output (n_prime, luk): luk is the unique cyclic
    rearrangement of word that factors into k+1 Lukasiewicz words such that
    word's first letter lands inside factor number k_prime; n_prime is the
    1-based position of that letter inside luk.  The map is a bijection onto
    pairs (position 1..n, concatenation of k+1 Lukasiewicz words).
    """
    n = len(word)
    k_plus_1 = -word_weight(word)
    if k_plus_1 < 1:
        raise BadRange("word must have negative weight")
    if not 1 <= k_prime <= k_plus_1:
        raise BadRange(f"k_prime must lie in 1..{k_plus_1}")
    # scalar products of the path points with (k+1, n) are n-periodic; a
    # minimum marks the start of a Lukasiewicz factor of the good rotation
    running = 0
    best_pos, best_val = None, None
    for j in range(1, n + 1):
        running += word[j - 1] - 1
        value = k_plus_1 * j + n * running
        if best_val is None or value < best_val:
            best_val, best_pos = value, j
    factors = factorize_lukasiewicz(_rotation(word, best_pos % n))
    starts = []  # 0-based original index where each factor begins
    acc = best_pos % n
    for factor in factors:
        starts.append(acc % n)
        acc += len(factor)
    # which factor holds the original first letter (index 0)?
    containing = next(
        idx
        for idx, factor in enumerate(factors)
        if (0 - starts[idx]) % n < len(factor)
    )
    # rotating to a different factor start shifts the factor that letter lands in
    target = (containing - (k_prime - 1)) % k_plus_1
    luk = _rotation(word, starts[target])
    n_prime = (0 - starts[target]) % n + 1
    return n_prime, luk


def product_to_cyclic(n_prime: int, luk: Word) -> tuple[int, Word]:
    """Inverse of cyclic_to_product: rotate back and report the factor index."""
    n = len(luk)
    if not 1 <= n_prime <= n:
        raise BadRange("position out of range")
    factors = factorize_lukasiewicz(luk)
    boundary = 0
    k_prime = None
    for idx, factor in enumerate(factors):
        if boundary < n_prime <= boundary + len(factor):
            k_prime = idx + 1
            break
        boundary += len(factor)
    word = _rotation(luk, n_prime - 1)
    return k_prime, word


# -- trees ------------------------------------------------------------------------

# A plane tree is a tuple of child subtrees; () is a single vertex.
# A regular binary tree is () for a leaf or a pair (left, right).


def word_to_tree(word: Word) -> tuple:
    """Lukasiewicz word -> plane tree: first letter is the root degree."""
    if not is_lukasiewicz(word):
        raise NotFactorizable(f"not a Lukasiewicz word: {word}")
    degree = word[0]
    if degree == 0:
        return ()
    rest = word[1:]
    return tuple(word_to_tree(f) for f in factorize_lukasiewicz(rest))


def tree_to_word(tree: tuple) -> Word:
    """Plane tree -> Lukasiewicz word by first-visit degrees."""
    word = [len(tree)]
    for child in tree:
        word.extend(tree_to_word(child))
    return tuple(word)


def word_to_parens(word: Word) -> str:
    """Drop the final 0-letter, then letter i becomes i opens and one close."""
    if not is_lukasiewicz(word):
        raise NotFactorizable(f"not a Lukasiewicz word: {word}")
    return "".join("(" * letter + ")" for letter in word[:-1])


def parens_to_word(text: str) -> Word:
    """Inverse of word_to_parens: letters are the open-runs before each close."""
    letters = []
    run = 0
    for ch in text:
        if ch == "(":
            run += 1
        elif ch == ")":
            letters.append(run)
            run = 0
        else:
            raise NotFactorizable(f"unexpected character {ch!r}")
    if run:
        raise NotFactorizable("dangling open parentheses")
    word = tuple(letters) + (0,)
    if not is_lukasiewicz(word):
        raise NotFactorizable("string does not encode a Lukasiewicz word")
    return word


def plane_trees(vertices: int) -> list[tuple]:
    """All plane rooted trees with the given number of vertices."""
    if vertices < 1:
        raise BadRange("a tree needs at least one vertex")
    return list(_trees_cached(vertices))


@cache
def _trees_cached(vertices: int) -> tuple:
    return tuple(_forests(vertices - 1))


@cache
def _forests(total: int) -> tuple:
    if total == 0:
        return ((),)
    out = []
    for first in range(1, total + 1):
        for tree in _trees_cached(first):
            for rest in _forests(total - first):
                out.append((tree,) + rest)
    return tuple(out)


def binary_trees(internal: int) -> list[tuple]:
    """Regular binary trees with `internal` internal nodes (internal+1 leaves)."""
    if internal < 0:
        raise BadRange("negative node count")
    return list(_binary_cached(internal))


@cache
def _binary_cached(internal: int) -> tuple:
    if internal == 0:
        return ((),)
    out = []
    for left_size in range(internal):
        for left in _binary_cached(left_size):
            for right in _binary_cached(internal - 1 - left_size):
                out.append((left, right))
    return tuple(out)


def mirror_plane(tree: tuple) -> tuple:
    return tuple(mirror_plane(c) for c in reversed(tree))


def mirror_binary(tree: tuple) -> tuple:
    if not tree:
        return ()
    left, right = tree
    return (mirror_binary(right), mirror_binary(left))


def contract_left(tree: tuple) -> tuple:
    """Collapse all left edges of a regular binary tree into a plane tree."""
    if not tree:
        return ()
    left, right = tree
    return contract_left(left) + (contract_left(right),)


def contract_right(tree: tuple) -> tuple:
    """Collapse all right edges of a regular binary tree into a plane tree."""
    if not tree:
        return ()
    left, right = tree
    return (contract_right(left),) + contract_right(right)


def expand_left(tree: tuple) -> tuple:
    """Inverse of contract_left."""
    if not tree:
        return ()
    head, tail = tree[:-1], tree[-1]
    return (expand_left(head), expand_left(tail))


def expand_right(tree: tuple) -> tuple:
    """Inverse of contract_right."""
    if not tree:
        return ()
    head, tail = tree[0], tree[1:]
    return (expand_right(head), expand_right(tail))


def binary_left_involution(b: tuple) -> tuple:
    return expand_left(mirror_plane(contract_left(b)))


def binary_right_involution(b: tuple) -> tuple:
    return expand_right(mirror_plane(contract_right(b)))


def plane_left_involution(t: tuple) -> tuple:
    return contract_left(mirror_binary(expand_left(t)))


def plane_right_involution(t: tuple) -> tuple:
    return contract_right(mirror_binary(expand_right(t)))


def dihedral_orbits(n: int, side: str) -> dict:
    """Orbits and fixed points of the two mirror-conjugated involutions.

    side = "binary": involutions on regular binary trees with n internal
    nodes; side = "plane": the conjugated pair on plane trees with n+1
    vertices.  Returns orbits plus fixed-point counts for both involutions.
    """
    if n > 10:
        raise InstanceTooLarge("orbit enumeration capped at n = 10")
    if side == "binary":
        elements = binary_trees(n)
        first, second = binary_left_involution, binary_right_involution
    elif side == "plane":
        elements = plane_trees(n + 1)
        first, second = plane_left_involution, plane_right_involution
    else:
        raise BadRange("side must be 'binary' or 'plane'")
    seen = set()
    orbits = []
    for element in elements:
        if element in seen:
            continue
        orbit = {element}
        frontier = [element]
        while frontier:
            current = frontier.pop()
            for image in (first(current), second(current)):
                if image not in orbit:
                    orbit.add(image)
                    frontier.append(image)
        seen |= orbit
        orbits.append(sorted(orbit))
    return {
        "orbits": orbits,
        "fixed_left": sum(1 for e in elements if first(e) == e),
        "fixed_right": sum(1 for e in elements if second(e) == e),
        "count": len(elements),
    }


# -- Motzkin paths ------------------------------------------------------------------

UP, LEVEL, DOWN = 1, 0, -1


def motzkin_paths(n: int) -> list[tuple]:
    """All first-quadrant paths of n steps from height 0 back to height 0."""
    if n < 0:
        raise BadRange("negative length")
    out = []
    steps: list[int] = []

    def extend(position: int, height: int):
        if position == n:
            if height == 0:
                out.append(tuple(steps))
            return
        if height > n - position:  # cannot come back down in time
            return
        for step in (UP, LEVEL, DOWN):
            if step == DOWN and height == 0:
                continue
            steps.append(step)
            extend(position + 1, height + step)
            steps.pop()

    extend(0, 0)
    return out


def motzkin_weight(path: tuple, jf: JFraction | None = None):
    """Product of step weights: level at height h -> p_h, descent to h -> q_h.

    With a JFraction the numeric weights are used (heights beyond its depth
    weigh zero); without one the result is a polynomial in variables p0, p1,
    ... and q0, q1, ...
    """
    if jf is None:
        total = MultiPoly.constant(1)
        height = 0
        for step in path:
            if step == LEVEL:
                total = total * MultiPoly.variable(f"p{height}")
            elif step == DOWN:
                height -= 1
                total = total * MultiPoly.variable(f"q{height}")
            else:
                height += 1
        return total
    total = jf.d0 * 0 + 1
    height = 0
    for step in path:
        if step == LEVEL:
            if height > jf.depth:
                return total * 0
            total = total * jf.p[height]
        elif step == DOWN:
            height -= 1
            if height >= jf.depth:
                return total * 0
            total = total * jf.q[height]
        else:
            height += 1
    return total


def motzkin_prime_factors(path: tuple) -> list[tuple]:
    """Split at every return to height 0; factors touch 0 only at their ends."""
    factors = []
    height = 0
    start = 0
    for i, step in enumerate(path):
        height += step
        if height == 0:
            factors.append(path[start : i + 1])
            start = i + 1
    if start != len(path):
        raise BadRange("path does not end at height 0")
    return factors


def lgv_minor(jf: JFraction, rows, cols):
    """Signed sum over vertex-disjoint path systems, times d0^(k+1).

    rows/cols are strictly increasing index tuples of equal length k+1 <= 3
    with entries <= 4.  Paths run from (-rows[i], 0) to (cols[sigma(i)], 0);
    configurations sharing a lattice point cancel in pairs, and the survivors
    reproduce the corresponding Hankel minor of the contracted series.
    """
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise BadRange("need as many rows as columns")
    if len(rows) > 3 or (rows and max(max(rows), max(cols)) > 4):
        raise InstanceTooLarge("oracle capped at k <= 2 and indices <= 4")
    if list(rows) != sorted(set(rows)) or list(cols) != sorted(set(cols)):
        raise BadRange("indices must be strictly increasing")
    k_plus_1 = len(rows)
    paths_between = {}
    for a in rows:
        for b in cols:
            paths_between[(a, b)] = motzkin_paths(a + b)
    zero = jf.d0 * 0
    total = zero
    for sigma in permutations(range(k_plus_1)):
        sign = _permutation_sign(sigma)
        choices = [paths_between[(rows[i], cols[sigma[i]])] for i in range(k_plus_1)]

        def assemble(index: int, chosen_vertices: list, weight):
            nonlocal total
            if not weight:
                return
            if index == k_plus_1:
                total = total + (weight if sign > 0 else -weight)
                return
            start_x = -rows[index]
            for path in choices[index]:
                vertices = _path_vertices(path, start_x)
                if any(vertices & prev for prev in chosen_vertices):
                    continue
                assemble(
                    index + 1,
                    chosen_vertices + [vertices],
                    weight * motzkin_weight(path, jf),
                )

        assemble(0, [], zero + 1)
    scale = zero + 1
    for _ in range(k_plus_1):
        scale = scale * jf.d0
    return scale * total


def _path_vertices(path: tuple, start_x: int) -> frozenset:
    points = [(start_x, 0)]
    height = 0
    for i, step in enumerate(path):
        height += step
        points.append((start_x + i + 1, height))
    return frozenset(points)


def _permutation_sign(sigma) -> int:
    sign = 1
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                sign = -sign
    return sign


# -- word-level oracles for the algebra ----------------------------------------------


def word_monomial(word: Word, prefix: str = "s") -> MultiPoly:
    total = MultiPoly.constant(1)
    for letter in word:
        total = total * MultiPoly.variable(f"{prefix}{letter}")
    return total


def word_coefficient_sum(n: int, k: int, prefix: str = "s") -> MultiPoly:
    """Sum of the commutative monomials of all words counted by enum_words."""
    if n > 10:
        raise InstanceTooLarge("word oracle capped at n = 10")
    total = MultiPoly.constant(0)
    for word in enum_words(n, k):
        total = total + word_monomial(word, prefix)
    return total


def reduced_word_series(order: int, prefix: str = "s") -> TruncatedSeries:
    """Generating series of Lukasiewicz words avoiding letter 1, by length."""
    zero = MultiPoly.constant(0)
    coeffs = [zero]
    for n in range(1, order + 1):
        total = zero
        for word in lukasiewicz_words(n):
            if 1 not in word:
                total = total + word_monomial(word, prefix)
        coeffs.append(total)
    return TruncatedSeries(coeffs)


def full_word_series(order: int, prefix: str = "s") -> TruncatedSeries:
    """Generating series of all Lukasiewicz words, by length."""
    zero = MultiPoly.constant(0)
    coeffs = [zero]
    for n in range(1, order + 1):
        total = zero
        for word in lukasiewicz_words(n):
            total = total + word_monomial(word, prefix)
        coeffs.append(total)
    return TruncatedSeries(coeffs)


def reduced_word_identity_holds(order: int) -> bool:
    """Whether the full word series is the reduced one at t/(1 - s1*t).

    Both sides are expanded symbolically to the requested order; letter 1
    weighs nothing, which is why inserting runs of it only rescales t.
    """
    if order > 12:
        raise InstanceTooLarge("symbolic check capped at order 12")
    lhs = full_word_series(order)
    reduced = reduced_word_series(order)
    s1 = MultiPoly.variable("s1")
    # inner substitution t -> t/(1 - s1 t) = t + s1 t^2 + s1^2 t^3 + ...
    inner = TruncatedSeries(
        [MultiPoly.constant(0)] + [s1**j for j in range(order)]
    )
    rhs = reduced.compose(inner)
    return lhs == rhs
