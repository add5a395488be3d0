"""
Three-tangle rotation module for skein4

This module rotates 3-tangle values. r moves every boundary point one step
counterclockwise, so r^6 is the identity and r^3 is the half turn, which
acts on words by reversing them and exchanging the indices 1 and 2. A single
step r of a basic tangle is found by rotating its diagram, removing curls and
bigons and recognising the result among short words in s1^+-1, s2^+-1, U1,
U2. The double step of (s1 s2^-1)^2 is the stored expansion.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Dict, Sequence, Tuple

from skein4.app.errors import RotationUnsupportedError
from skein4.app.services.coeff.specs import CoeffSpec
from skein4.app.services.engine.basis3 import ALTERNATING_REPRESENTATIVE, Key3, Token
from skein4.app.services.engine.table_cache import VectorStore
from skein4.app.services.engine.tangle3 import eval_tokens
from skein4.app.services.engine.vectors import MemoTable, SkeinVector
from skein4.app.services.tangles.braid import BraidWord
from skein4.app.services.tangles.diagram import Diagram, canonical_code, simplify

# Configure logging
logger = logging.getLogger(__name__)

RECOGNITION_TOKENS: Tuple[Token, ...] = (1, -1, 2, -2, "U1", "U2")
RECOGNITION_LENGTH = 5

REPRESENTATIVE_KEY = Key3.braid(ALTERNATING_REPRESENTATIVE)

_SWAP = {1: 2, -1: -2, 2: 1, -2: -1, "U1": "U2", "U2": "U1"}


def token_diagram(tokens: Sequence[Token]) -> Diagram:
    """Diagram of a word over s1^+-1, s2^+-1, U1, U2 read bottom to top."""
    diagram = Diagram.identity(3)
    for token in tokens:
        if isinstance(token, int):
            piece = Diagram.letter(3, token)
        else:
            piece = Diagram.cupcap(3, int(token[1:]))
        diagram = diagram.compose(piece)
    return diagram


def key_diagram(key: Key3) -> Diagram:
    if key.is_braid:
        return Diagram.braid(BraidWord(3, key.word))
    return token_diagram(key.tokens)


def half_turn_tokens(tokens: Sequence[Token]) -> Tuple[Token, ...]:
    return tuple(_SWAP[token] for token in reversed(tokens))


@lru_cache(maxsize=None)
def recognition_table() -> Dict[Tuple, Tuple[Tuple[Token, ...], int]]:
    """
    Canonical code of every simplified short word diagram.

    Words are visited by length and then in token order, so each code keeps
    its shortest, least word. Words whose simplified diagram still has free
    loops are left out.

    Returns:
        Dict: code -> (word, framing of the curls removed from its diagram)
    """
    table: Dict[Tuple, Tuple[Tuple[Token, ...], int]] = {}
    for length in range(RECOGNITION_LENGTH + 1):
        for word in product(RECOGNITION_TOKENS, repeat=length):
            reduced, kinks = simplify(token_diagram(word))
            if reduced.loops:
                continue
            code = canonical_code(reduced)
            if code is not None and code not in table:
                table[code] = (word, kinks)
    logger.info(f"Built 3-tangle recognition table with {len(table)} diagrams")
    return table


def recognise(diagram: Diagram, spec: CoeffSpec) -> SkeinVector:
    """
    Value of a 3-tangle diagram that simplifies to a short word.

    Raises:
        RotationUnsupportedError: the simplified diagram matches no short word
    """
    reduced, kinks = simplify(diagram)
    code = canonical_code(reduced)
    match = recognition_table().get(code) if code is not None else None
    if match is None:
        raise RotationUnsupportedError(
            f"Rotated diagram with {len(reduced.crossings)} crossings is not a word of length <= {RECOGNITION_LENGTH}"
        )
    word, word_kinks = match
    factor = spec.a_power(kinks - word_kinks) * spec.t ** reduced.loops
    return eval_tokens(word, spec).scale(factor)


def double_step_representative(spec: CoeffSpec) -> SkeinVector:
    """r^2 of (s1 s2^-1)^2 expanded over short words."""
    b0i, b3i = spec.b0_inv, spec.b3_inv
    b1, b2 = spec.b1, spec.b2

    def word(*tokens: Token) -> SkeinVector:
        return eval_tokens(tokens, spec)

    return (
        SkeinVector.basis(3, spec.ring, REPRESENTATIVE_KEY)
        + (word(-2, -1) - word(1, "U2", -1)).scale(b0i * b2)
        + (word(2, 1) - word(-1, "U2", 1)).scale(b1 * b3i)
        + (word(-2, 1) - word(1, "U2", 1)).scale(b0i * b1 * b2 * b3i)
    )


def _key_text(key: Tuple[Key3, int]) -> Tuple[str, str]:
    return str(key[0]), str(key[1])


_tables: Dict[str, MemoTable] = {}


def _table(spec: CoeffSpec) -> MemoTable:
    if spec.name not in _tables:
        store = VectorStore("rotation3", spec, 3, _key_text, Key3.parse)
        _tables.setdefault(spec.name, MemoTable(f"rotation3:{spec.name}", store))
    return _tables[spec.name]


def _apply(vector: SkeinVector, steps: int, spec: CoeffSpec) -> SkeinVector:
    return vector.expand(lambda key: rotate_key(key, steps, spec), 3)


def _compute(key: Key3, steps: int, spec: CoeffSpec) -> SkeinVector:
    if steps == 3:
        return eval_tokens(half_turn_tokens(key.tokens), spec)
    if steps > 3:
        return _apply(rotate_key(key, steps - 3, spec), 3, spec)
    if steps == 2:
        if key == REPRESENTATIVE_KEY:
            return double_step_representative(spec)
        return _apply(rotate_key(key, 1, spec), 1, spec)
    return recognise(key_diagram(key).rotate(1), spec)


def rotate_key(key: Key3, steps: int, spec: CoeffSpec) -> SkeinVector:
    """
    r^steps of a basic 3-tangle.

    Args:
        key: basis key
        steps: number of counterclockwise steps, taken mod 6
        spec: coefficient spec

    Returns:
        SkeinVector: arity-3 vector over the 40 basis keys
    """
    steps %= 6
    if steps == 0:
        return SkeinVector.basis(3, spec.ring, key)
    return _table(spec).get_or_compute((key, steps), lambda: _compute(key, steps, spec))


def rotate_vector(vector: SkeinVector, steps: int, spec: CoeffSpec) -> SkeinVector:
    """r^steps of a 3-tangle value."""
    steps %= 6
    if steps == 0:
        return vector
    return _apply(vector, steps, spec)


def rotation_table(spec: CoeffSpec, keys: Sequence[Key3]) -> Dict[Tuple[Key3, int], SkeinVector]:
    """r^k for k = 0..5 of every given key."""
    return {(key, k): rotate_key(key, k, spec) for key in keys for k in range(6)}
