"""Load raw domain records and decompose them into fielded documents.

A record is raw bytes plus out-of-band anchor texts and referrer URLs.
Parsing is lenient tag-soup recovery built on html.parser; malformed
markup never raises, only a total decode failure does.
"""

import codecs
import json
import re
import time
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from html.parser import HTMLParser
from pathlib import Path

from .errors import DecodeError, EmptyBody, FetchError

DEFAULT_FETCH_TIMEOUT_MS = 5000


@dataclass(frozen=True)
class DomainRecord:
    domain_id: str
    html_source: bytes
    anchor_texts: list[str] = field(default_factory=list)
    referrer_urls: list[str] = field(default_factory=list)
    fetched_at: int = 0


@dataclass(frozen=True)
class FieldedDocument:
    """One parked page decomposed into the six scored text fields."""

    domain_id: str
    title: str = ""
    content: str = ""
    meta_keywords: str = ""
    meta_description: str = ""
    headers: str = ""
    anchors: str = ""
    language: str = ""
    encoding: str = ""

    FIELDS = ("title", "content", "meta_keywords", "meta_description",
              "headers", "anchors")

    def field_text(self, name: str) -> str:
        return getattr(self, name)

    @property
    def unusable(self) -> bool:
        return all(not getattr(self, f) for f in self.FIELDS)


def load_record(path_or_url: str, anchors: list[str] | None = None,
                referrers: list[str] | None = None,
                fetch_timeout_ms: int = DEFAULT_FETCH_TIMEOUT_MS) -> DomainRecord:
    """Read raw bytes from a local file or an http(s) URL. No decoding here."""
    anchors = list(anchors or [])
    referrers = list(referrers or [])
    if path_or_url.startswith(("http://", "https://")):
        domain_id = path_or_url.split("/")[2]
        try:
            with urllib.request.urlopen(
                path_or_url, timeout=fetch_timeout_ms / 1000.0
            ) as response:
                body = response.read()
        except (urllib.error.URLError, OSError, ValueError) as exc:
            raise FetchError(f"fetch failed: {path_or_url}", cause=exc) from exc
    else:
        path = Path(path_or_url)
        domain_id = path.parent.name if path.name == "page.html" else path.stem
        try:
            body = path.read_bytes()
        except OSError as exc:
            raise FetchError(f"cannot read {path}", cause=exc) from exc
    if not body:
        raise EmptyBody(path_or_url)
    return DomainRecord(
        domain_id=domain_id,
        html_source=body,
        anchor_texts=anchors,
        referrer_urls=referrers,
        fetched_at=int(time.time()),
    )


def load_corpus_record(corpus_dir: str | Path, domain_id: str) -> DomainRecord:
    """Load corpus/<domain_id>/page.html plus its meta.json sidecar."""
    root = Path(corpus_dir) / domain_id
    meta: dict = {}
    meta_path = root / "meta.json"
    if meta_path.exists():
        meta = json.loads(meta_path.read_text(encoding="utf-8"))
    record = load_record(
        str(root / "page.html"),
        anchors=meta.get("anchor_texts", []),
        referrers=meta.get("referrer_urls", []),
    )
    if meta.get("domain_id"):
        record = DomainRecord(
            domain_id=meta["domain_id"],
            html_source=record.html_source,
            anchor_texts=record.anchor_texts,
            referrer_urls=record.referrer_urls,
            fetched_at=record.fetched_at,
        )
    return record


# --- encoding detection ---------------------------------------------------

_BOMS = [
    (codecs.BOM_UTF8, "UTF-8"),
    (codecs.BOM_UTF32_LE, "UTF-32-LE"),
    (codecs.BOM_UTF32_BE, "UTF-32-BE"),
    (codecs.BOM_UTF16_LE, "UTF-16-LE"),
    (codecs.BOM_UTF16_BE, "UTF-16-BE"),
]

_META_CONTENT_TYPE = re.compile(
    rb"""<meta[^>]+http-equiv\s*=\s*["']?content-type["']?[^>]*>""",
    re.IGNORECASE,
)
_CHARSET_IN_CONTENT = re.compile(rb"""charset\s*=\s*["']?([\w.:-]+)""", re.IGNORECASE)
_META_CHARSET = re.compile(
    rb"""<meta[^>]+charset\s*=\s*["']?([\w.:-]+)["']?""", re.IGNORECASE
)


def _decodable(body: bytes, charset: str) -> bool:
    try:
        body.decode(charset)
        return True
    except (LookupError, UnicodeDecodeError):
        return False


def detect_encoding(record: DomainRecord) -> str:
    """Pick a charset that is guaranteed to decode the record's bytes.

    Precedence: byte-order mark, Content-Type meta header, meta charset
    attribute, UTF-8 validity, Latin-1 fallback.
    """
    body = record.html_source
    for bom, name in _BOMS:
        # truncated multi-byte bodies must still fall through to Latin-1
        if body.startswith(bom) and _decodable(body, name):
            return name
    head = body[:4096]
    declared = None
    ct = _META_CONTENT_TYPE.search(head)
    if ct:
        m = _CHARSET_IN_CONTENT.search(ct.group(0))
        if m:
            declared = m.group(1).decode("ascii", "ignore")
    if declared is None:
        m = _META_CHARSET.search(head)
        if m:
            declared = m.group(1).decode("ascii", "ignore")
    if declared and _decodable(body, declared):
        return declared.upper()
    if _decodable(body, "utf-8"):
        return "UTF-8"
    return "ISO-8859-1"


# --- field extraction -----------------------------------------------------

_SKIP_TAGS = {"script", "style", "noscript"}
_HEADER_TAGS = {"h1", "h2", "h3", "h4", "h5", "h6"}
_BLOCK_TAGS = {"p", "div", "section", "article", "ul", "ol", "li",
               "table", "tr", "td", "th", "footer", "header", "main"}


class _FieldParser(HTMLParser):
    """Collects title, meta tags, header text, and visible body text."""

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.title_parts: list[str] = []
        self.meta_keywords: list[str] = []
        self.meta_description: list[str] = []
        self.header_blocks: list[str] = []
        self.content_parts: list[str] = []
        self._skip_depth = 0
        self._in_title = False
        self._header_depth = 0
        self._current_header: list[str] = []

    def handle_starttag(self, tag, attrs):
        if tag in _SKIP_TAGS:
            self._skip_depth += 1
            return
        if tag == "title":
            self._in_title = True
            return
        if tag in _HEADER_TAGS or tag in _BLOCK_TAGS:
            # a block opening inside an unclosed header ends it, the way
            # browsers recover from tag soup
            self._flush_header()
        if tag in _HEADER_TAGS:
            self._header_depth += 1
            return
        if tag == "meta":
            self._handle_meta(dict(attrs))
        elif tag == "img":
            alt = dict(attrs).get("alt")
            if alt and not self._skip_depth:
                self.content_parts.append(alt)
        elif tag == "br":
            self.content_parts.append(" ")

    def handle_startendtag(self, tag, attrs):
        self.handle_starttag(tag, attrs)

    def handle_endtag(self, tag):
        if tag in _SKIP_TAGS:
            self._skip_depth = max(0, self._skip_depth - 1)
        elif tag == "title":
            self._in_title = False
        elif tag in _HEADER_TAGS:
            if self._header_depth:
                self._header_depth -= 1
                if not self._header_depth:
                    self._flush_header()

    def _flush_header(self):
        self._header_depth = 0
        if self._current_header:
            block = _collapse(" ".join(self._current_header))
            if block:
                self.header_blocks.append(block)
            self._current_header = []

    def close(self):
        super().close()
        self._flush_header()

    def handle_data(self, data):
        if self._skip_depth:
            return
        if self._in_title:
            self.title_parts.append(data)
            return
        if self._header_depth:
            self._current_header.append(data)
        self.content_parts.append(data)

    def _handle_meta(self, attrs: dict):
        name = (attrs.get("name") or "").strip().lower()
        content = attrs.get("content") or ""
        if name == "keywords":
            self.meta_keywords.append(content)
        elif name == "description":
            self.meta_description.append(content)


# title is RCDATA, so stray tags typed inside it reach us as literal text;
# strip anything shaped like a tag (angle bracket followed by a letter, the
# same test an HTML tokenizer uses), keep bare comparisons like "a < b"
_TAGLIKE = re.compile(r"</?[a-zA-Z][^>]*>")


def _collapse(text: str) -> str:
    return " ".join(text.split())


def parse_fields(record: DomainRecord, encoding: str, language: str) -> FieldedDocument:
    """Decompose the record into the six text fields, entities decoded."""
    body = record.html_source
    for bom, name in _BOMS:
        if body.startswith(bom) and encoding.upper() == name:
            body = body[len(bom):]
            break
    try:
        text = body.decode(encoding)
    except (LookupError, UnicodeDecodeError) as exc:
        raise DecodeError(f"cannot decode {record.domain_id} as {encoding}") from exc
    parser = _FieldParser()
    parser.feed(text)
    parser.close()
    return FieldedDocument(
        domain_id=record.domain_id,
        title=_collapse(_TAGLIKE.sub(" ", " ".join(parser.title_parts))),
        content=_collapse(" ".join(parser.content_parts)),
        meta_keywords=_collapse(" ".join(parser.meta_keywords)),
        meta_description=_collapse(" ".join(parser.meta_description)),
        headers="\n".join(parser.header_blocks),
        anchors="\n".join(record.anchor_texts),
        language=language,
        encoding=encoding,
    )
