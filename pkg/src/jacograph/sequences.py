"""Exact term generators for the integer sequences the conjectures target.

Each id carries its own start index, following the source conventions
rather than OEIS offsets (two of the golden-ratio sequences are shifted
or adapted variants, marked by their suffix). All terms come from
exact_arith; nothing here touches floats or the network. An offline
b-file comparison helper is provided for tests.
"""

from .exact_arith import floor_affine_sqrt5, floor_exp


def _wythoff_upper(t):
    # floor(t * (3 + sqrt(5)) / 2), the upper Wythoff Beatty value
    return floor_affine_sqrt5(3, 1, 2, t)


def _back_degree_term(i):
    return floor_affine_sqrt5(3, -1, 2, i + 1)


def _cumulative_back_degree(n):
    return sum(_back_degree_term(i) for i in range(1, n + 1))


# id -> (start index, term function)
_SEQUENCES = {
    "A060144": (1, _back_degree_term),
    "A183137": (1, _cumulative_back_degree),
    "A319433": (2, lambda n: floor_affine_sqrt5(-1, 1, 2, n + 2) - 1),
    "A003622": (1, lambda t: _wythoff_upper(t) - 1),
    "A035336": (1, lambda t: 2 * floor_affine_sqrt5(1, 1, 2, t) + t - 1),
    "A001950_CONJ4A": (1, lambda t: _wythoff_upper(t + 1) - 2),
    "A057843_SHIFTED": (2, lambda t: _wythoff_upper(t) - 3),
    "A134859_ADAPTED": (2, lambda t: 2 * _wythoff_upper(t) - (t + 2)),
    "A000149": (1, floor_exp),
}

SEQUENCE_IDS = tuple(_SEQUENCES)


def seq_start(seq_id):
    """First valid index of the sequence."""
    return _lookup(seq_id)[0]


def seq_term(seq_id, t):
    start, fn = _lookup(seq_id)
    if t < start:
        raise ValueError(f"{seq_id} starts at index {start}, got {t}")
    return fn(t)


def seq_prefix(seq_id, count, prepend_artificial=False):
    """First `count` terms from the sequence's start index.

    prepend_artificial adds the leading 1 two of the conjectures bolt
    onto their sequences; the 1 comes before the `count` real terms.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    start, fn = _lookup(seq_id)
    if seq_id == "A183137":
        # running sum, quadratic if done term by term
        total = 0
        terms = []
        for i in range(start, start + count):
            total += _back_degree_term(i)
            terms.append(total)
    else:
        terms = [fn(t) for t in range(start, start + count)]
    if prepend_artificial:
        terms.insert(0, 1)
    return tuple(terms)


def parse_b_file(text):
    """Parse OEIS b-file lines ("index value") into (index, value) pairs.

    Blank lines and '#' comments are skipped; anything else malformed
    raises.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"b-file line {lineno} is not 'index value'")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"b-file line {lineno} is not numeric") from None
    return tuple(pairs)


def _lookup(seq_id):
    try:
        return _SEQUENCES[seq_id]
    except KeyError:
        raise ValueError(f"unknown sequence id {seq_id!r}") from None
