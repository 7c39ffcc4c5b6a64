"""Reading and writing complexes as plain facet-list text files.

The format mirrors the tables used throughout: one maximal face per
line, vertex labels as whitespace-separated integers, '#' starting a
comment. Writing sorts vertices within a line and lines
lexicographically, so parse(write(K)) is the identity on face sets.
"""

from __future__ import annotations

from .complexes import Complex


def parse_facet_lines(lines, source: str = "<input>") -> Complex:
    """Build a complex from an iterable of facet-list lines."""
    facets = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        labels = []
        for token in text.split():
            try:
                labels.append(int(token))
            except ValueError:
                raise ValueError(
                    f"{source}:{lineno}: non-integer vertex label {token!r}")
        if len(set(labels)) != len(labels):
            raise ValueError(
                f"{source}:{lineno}: repeated vertex in facet {text!r}")
        facets.append(tuple(sorted(labels)))
    if not facets:
        raise ValueError(f"{source}: no facets found")
    return Complex.from_facets(facets)


def parse_facet_file(path) -> Complex:
    """Parse a facet-list file into a complex.

    Raises ValueError with the offending line number for malformed input
    and OSError for unreadable paths.
    """
    with open(path) as fh:
        return parse_facet_lines(fh, source=str(path))


def facet_lines(K: Complex, normalize: bool = False) -> list[str]:
    """The facet list of K as sorted lines of ascending vertex labels.

    With normalize=True, vertices are relabelled 1..n in label order;
    the default keeps the original labels.
    """
    facets = sorted(K.facets())
    if normalize:
        relabel = {v: i for i, v in enumerate(K.vertices(), start=1)}
        facets = sorted(tuple(sorted(relabel[v] for v in f)) for f in facets)
    return [" ".join(map(str, f)) for f in facets]


def write_facet_file(K: Complex, path, normalize: bool = False) -> None:
    """Write the maximal faces of K to a facet-list file."""
    if len(K) == 0:
        raise ValueError("cannot write an empty complex")
    with open(path, "w") as fh:
        for line in facet_lines(K, normalize=normalize):
            fh.write(line + "\n")
