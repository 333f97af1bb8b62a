"""Line-based instance file format.

    n <players>
    e <i> <j> <weight>      one line per pair 0 <= i < j <= n, weight < 2^32

Lines starting with '#' are comments. Blank lines are ignored. The canonical
form written by `serialize_instance` has no comments and lists the edges in
lexicographic (i, j) order, so parse -> serialize is a fixpoint.
"""

from core.exceptions import InstanceParseError, InvalidParameterError
from core.logger import get_logger
from graph.model import RootedWeightedGraph, first_missing_pair, pair_count

logger = get_logger(__name__)

# Exclusive upper bound for weights in instance files.
FILE_WEIGHT_LIMIT = 2**32


def _parse_uint(token: str, line_no: int, what: str) -> int:
    # str.isdigit also accepts non-ASCII digits such as superscripts
    if not (token.isascii() and token.isdigit()):
        raise InstanceParseError(line_no, f"{what} must be an unsigned decimal integer, got {token!r}")
    return int(token)


def parse_instance(text: str) -> RootedWeightedGraph:
    """Parses instance-file content into a graph.

    Args:
      text: Full file content.

    Returns:
      The graph with exactly the declared weights.

    Raises:
      InstanceParseError: On any syntax or completeness violation; the
        message names the offending line (or the last line for a missing pair).
    """
    n = None
    weights: dict[tuple[int, int], int] = {}
    last_line = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()

        if n is None:
            if tokens[0] != "n" or len(tokens) != 2:
                raise InstanceParseError(line_no, "expected header 'n <players>'")
            n = _parse_uint(tokens[1], line_no, "player count")
            if n < 1:
                raise InstanceParseError(line_no, "player count must be >= 1")
            continue

        if tokens[0] != "e" or len(tokens) != 4:
            raise InstanceParseError(line_no, "expected edge line 'e <i> <j> <weight>'")
        if tokens[3].startswith("-"):
            raise InstanceParseError(line_no, f"negative weight {tokens[3]}")
        i = _parse_uint(tokens[1], line_no, "vertex label")
        j = _parse_uint(tokens[2], line_no, "vertex label")
        w = _parse_uint(tokens[3], line_no, "weight")
        if i == j:
            raise InstanceParseError(line_no, f"self loop at vertex {i}")
        if max(i, j) > n:
            raise InstanceParseError(line_no, f"vertex label out of range 0..{n}")
        if w >= FILE_WEIGHT_LIMIT:
            raise InstanceParseError(line_no, f"weight {w} >= 2^32")
        key = (min(i, j), max(i, j))
        if key in weights:
            raise InstanceParseError(line_no, f"duplicate pair {key}")
        weights[key] = w

    if n is None:
        raise InstanceParseError(max(last_line, 1), "missing header 'n <players>'")
    if len(weights) != pair_count(n):
        raise InstanceParseError(last_line, f"incomplete graph: missing pair {first_missing_pair(n, weights)}")

    try:
        graph = RootedWeightedGraph.from_pairs(n, weights)
    except InvalidParameterError as exc:
        raise InstanceParseError(last_line, exc.message) from exc

    logger.debug("解析实例完成", extra={"n": n, "pairs": len(weights)})
    return graph


def serialize_instance(graph: RootedWeightedGraph) -> str:
    """Renders the canonical instance text (LF line endings, trailing newline)."""
    lines = [f"n {graph.n}"]
    lines.extend(f"e {i} {j} {w}" for i, j, w in graph.pairs())
    return "\n".join(lines) + "\n"


def read_instance(path: str) -> RootedWeightedGraph:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as exc:
        line_no = raw.count(b"\n", 0, exc.start) + 1
        raise InstanceParseError(line_no, f"non-ASCII byte 0x{raw[exc.start]:02x}") from exc
    return parse_instance(text)


def write_instance(path: str, graph: RootedWeightedGraph, comments: list[str] | None = None) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(render_instance(graph, comments))


def render_instance(graph: RootedWeightedGraph, comments: list[str] | None = None) -> str:
    """Canonical text preceded by optional '# ' comment lines."""
    header = "".join(f"# {c}\n" for c in comments or [])
    return header + serialize_instance(graph)
