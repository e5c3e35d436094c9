"""Tolerant HTML parsing with a small CSS selector engine.

Real portal HTML is dirty: unclosed tags, stray close tags, missing
quotes. Parsing never raises; mismatched close tags are recovered by
popping to the nearest matching open element, unmatched ones ignored.

The selector subset covers what harvesting blueprints need:

    tag        .class      #id       [attr]      [attr=value]
    compound selectors (``div.card#main``), descendant (space) and
    child (``>``) combinators, and comma-separated groups.

Matches are returned in document order; ``select_one`` is first-match.
"""

from __future__ import annotations

import re
from html.parser import HTMLParser

VOID_ELEMENTS = frozenset(
    "area base br col embed hr img input link meta param source track wbr".split()
)

# opening <key> implies closing a still-open element in the value set,
# the way browsers treat unclosed <li>, <p>, table cells etc.
IMPLIED_CLOSE = {
    "li": {"li", "p"},
    "p": {"p"},
    "td": {"td", "th", "p"},
    "th": {"td", "th", "p"},
    "tr": {"tr", "td", "th", "p"},
    "dt": {"dt", "dd", "p"},
    "dd": {"dt", "dd", "p"},
    "option": {"option"},
}


class Element:
    """One node in the parsed tree. ``tag`` is lowercase."""

    __slots__ = ("tag", "attrs", "children", "parent", "_text_parts")

    def __init__(self, tag, attrs=None, parent=None):
        self.tag = tag
        self.attrs = dict(attrs or {})
        self.children = []
        self.parent = parent
        self._text_parts = []

    @property
    def classes(self):
        return (self.attrs.get("class") or "").split()

    def text(self):
        """All descendant text, whitespace collapsed to single spaces."""
        parts = []
        self._collect_text(parts)
        return re.sub(r"\s+", " ", "".join(parts)).strip()

    def _collect_text(self, parts):
        for item in self._text_parts:
            if isinstance(item, Element):
                item._collect_text(parts)
            else:
                parts.append(item)

    def iter(self):
        """Yield self and all descendants in document order."""
        yield self
        for child in self.children:
            yield from child.iter()

    def select(self, selector):
        compiled = _compile_selector_group(selector)
        return [el for el in self.iter() if any(_matches_chain(el, chain) for chain in compiled)]

    def select_one(self, selector):
        compiled = _compile_selector_group(selector)
        for el in self.iter():
            if any(_matches_chain(el, chain) for chain in compiled):
                return el
        return None

    def __repr__(self):
        return f"<Element {self.tag} {self.attrs!r}>"


class _TreeBuilder(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.root = Element("[document]")
        self.stack = [self.root]

    def handle_starttag(self, tag, attrs):
        closes = IMPLIED_CLOSE.get(tag)
        if closes:
            while len(self.stack) > 1 and self.stack[-1].tag in closes:
                self.stack.pop()
        merged = {}
        for name, value in attrs:
            # repeated attributes: first one wins, like browsers
            merged.setdefault(name, value if value is not None else "")
        el = Element(tag, merged, parent=self.stack[-1])
        self.stack[-1].children.append(el)
        self.stack[-1]._text_parts.append(el)
        if tag not in VOID_ELEMENTS:
            self.stack.append(el)

    def handle_startendtag(self, tag, attrs):
        self.handle_starttag(tag, attrs)
        if tag not in VOID_ELEMENTS:
            self.stack.pop()

    def handle_endtag(self, tag):
        for i in range(len(self.stack) - 1, 0, -1):
            if self.stack[i].tag == tag:
                del self.stack[i:]
                return
        # unmatched close tag: ignore

    def handle_data(self, data):
        self.stack[-1]._text_parts.append(data)


def parse_html(text):
    """Parse HTML into an Element tree. Never raises on bad markup."""
    builder = _TreeBuilder()
    builder.feed(text)
    builder.close()
    return builder.root


# --- selector engine ---------------------------------------------------------

_SIMPLE_RE = re.compile(
    r"""
    (?P<tag>[A-Za-z][\w-]*|\*)?
    (?P<rest>(?:[.#][\w-]+|\[[^\]]+\])*)
    """,
    re.VERBOSE,
)
_PART_RE = re.compile(r"[.#][\w-]+|\[[^\]]+\]")


class SelectorError(ValueError):
    pass


def _parse_compound(token):
    m = _SIMPLE_RE.fullmatch(token)
    if not m or (not m.group("tag") and not m.group("rest")):
        raise SelectorError(f"unsupported selector: {token!r}")
    tag = m.group("tag")
    tag = None if tag in (None, "*") else tag.lower()
    classes, ident, attr_tests = [], None, []
    for part in _PART_RE.findall(m.group("rest") or ""):
        if part.startswith("."):
            classes.append(part[1:])
        elif part.startswith("#"):
            ident = part[1:]
        else:
            body = part[1:-1]
            if "=" in body:
                name, _, value = body.partition("=")
                attr_tests.append((name.strip(), value.strip().strip("'\"")))
            else:
                attr_tests.append((body.strip(), None))
    return (tag, classes, ident, attr_tests)


def _compile_selector_group(selector):
    """Compile to a list of chains; each chain is [(combinator, compound)]
    ordered left-to-right, combinator in {None, ' ', '>'}."""
    chains = []
    for alternative in selector.split(","):
        alternative = alternative.strip()
        if not alternative:
            raise SelectorError(f"empty selector in {selector!r}")
        tokens = re.split(r"\s*(>)\s*|\s+", alternative)
        chain = []
        combinator = None
        for token in tokens:
            if token is None or token == "":
                continue
            if token == ">":
                combinator = ">"
                continue
            chain.append((combinator, _parse_compound(token)))
            combinator = " "
        if not chain:
            raise SelectorError(f"empty selector in {selector!r}")
        chains.append(chain)
    return chains


def _matches_compound(el, compound):
    tag, classes, ident, attr_tests = compound
    if tag is not None and el.tag != tag:
        return False
    if ident is not None and el.attrs.get("id") != ident:
        return False
    el_classes = el.classes
    if any(c not in el_classes for c in classes):
        return False
    for name, value in attr_tests:
        if name not in el.attrs:
            return False
        if value is not None and el.attrs[name] != value:
            return False
    return True


def _matches_chain(el, chain):
    # match right-to-left, walking up through ancestors
    combinator, compound = chain[-1]
    if not _matches_compound(el, compound):
        return False
    return _matches_prefix(el, chain[:-1], combinator)


def _matches_prefix(el, prefix, combinator):
    if not prefix:
        return True
    parent = el.parent
    if combinator == ">":
        return parent is not None and _matches_chain(parent, prefix)
    while parent is not None:
        if _matches_chain(parent, prefix):
            return True
        parent = parent.parent
    return False
