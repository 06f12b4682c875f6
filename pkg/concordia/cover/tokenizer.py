import re
from typing import List

from concordia.exceptions import KnotSyntaxError
from concordia.types import Token

PUNCTUATION = "()[],;#-^"

_TOKEN_PATTERN = re.compile(
    r"(?P<INT>\d+)|(?P<NAME>[A-Za-z][A-Za-z0-9]*)|(?P<PUNCT>[" + re.escape(PUNCTUATION) + r"])|(?P<WS>\s+)|(?P<OTHER>.)",
    re.DOTALL | re.ASCII,
)


class Tokenizer:
    """Tokenize knot expressions.

    Use the Tokenizer by first tokenizing the text, and then calling the getter methods. The token list always ends with
    a token of kind `EOF`.
    """

    def __init__(self):
        self.tokens = []

    def tokenize(self, text: str):
        self.tokens = []
        line, line_start = 1, 0
        for match in _TOKEN_PATTERN.finditer(text):
            kind = match.lastgroup
            start = match.start()
            column = start - line_start + 1
            if kind == "OTHER":
                raise KnotSyntaxError(f"Unexpected character {match.group()!r}", line, column)
            if kind == "WS":
                for offset, char in enumerate(match.group()):
                    if char == "\n":
                        line, line_start = line + 1, start + offset + 1
                continue
            if kind == "PUNCT":
                kind = match.group()
            self.tokens.append(Token(kind, match.group(), start, match.end(), line, column))
        self.tokens.append(Token("EOF", "", len(text), len(text), line, len(text) - line_start + 1))

    def get_tokens(self) -> List[Token]:
        return self.tokens
