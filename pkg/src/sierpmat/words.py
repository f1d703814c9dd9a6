"""Thue-Morse word construction and cube detection."""
from __future__ import annotations

from .bitops import digit_sum

DEFAULT_LETTERS = ("a", "b")


def _check_letters(letters: tuple[str, str]) -> tuple[str, str]:
    first, second = letters
    if len(first) != 1 or len(second) != 1 or first == second:
        raise ValueError("letters must be two distinct single characters")
    return first, second


def tm_by_doubling(min_length: int, letters: tuple[str, str] = DEFAULT_LETTERS) -> str:
    """Thue-Morse prefix grown by repeatedly appending the letter-swapped word.

    Starts from the single first letter; each step appends the copy with the
    two letters exchanged, doubling the length. The result is therefore the
    prefix whose length is the smallest power of two >= min_length; callers
    wanting an exact length can slice.
    """
    if min_length < 1:
        raise ValueError("min_length must be >= 1")
    first, second = _check_letters(letters)
    swap = str.maketrans(first + second, second + first)
    word = first
    while len(word) < min_length:
        word += word.translate(swap)
    return word


def tm_by_digit_sum(length: int) -> list[int]:
    """Signs (-1)**digit_sum(n) for n = 0 .. length-1.

    Closed form of the Thue-Morse word over {+1, -1}: +1 where the binary
    digit sum of the position is even, -1 where it is odd.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    return [-1 if digit_sum(n) % 2 else 1 for n in range(length)]


def word_to_signs(word: str, letters: tuple[str, str] = DEFAULT_LETTERS) -> list[int]:
    """Map a two-letter word to signs: first letter -> +1, second -> -1."""
    first, second = _check_letters(letters)
    signs = []
    for ch in word:
        if ch == first:
            signs.append(1)
        elif ch == second:
            signs.append(-1)
        else:
            raise ValueError(f"letter {ch!r} is not in the alphabet {letters!r}")
    return signs


def is_cube_free(word: str) -> bool:
    """True when no factor of the word has the form www with w nonempty.

    Naive scan over every start position and period length; quadratic in the
    number of candidate factors, which is fine at the lengths this library
    targets.
    """
    if len(word) == 0:
        raise ValueError("word must be nonempty")
    length = len(word)
    for start in range(length):
        longest = (length - start) // 3
        for period in range(1, longest + 1):
            mid = start + period
            far = mid + period
            if word[start:mid] == word[mid:far] == word[far:far + period]:
                return False
    return True
