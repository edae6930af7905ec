"""Array codes built from collections of subspaces, and their exact analysis.

A code instance is a b x n array code of dimension M over GF(q): messages
are vectors of GF(q)^M, codewords are b x n arrays, and the weight of a
codeword is the number of nonzero columns. Thick column j of the flattened
M x bn generator holds the transposed canonical basis of the j-th
associated subspace (zero-padded to width b), so the column space of thick
column j is that subspace by construction.

Distance and weight statistics come from an exact scan of all q^M messages
driven by a base-q Gray sequence: each step updates one generator-row
coefficient, the scan supports arbitrary index ranges with random-access
starts, and range results merge by histogram addition, so partitioning
never changes the outcome.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    AmbientMismatch,
    BadParams,
    DimensionMismatch,
    DimensionTooLarge,
    DuplicateBlock,
    Inconsistent,
    MixedDimensions,
    NotDivisible,
    OutOfRange,
    TooLarge,
)
from .designs import build_spread, build_std, enumerate_grassmannian
from .gf import FieldContext, parse_field
from .limits import guard
from .linalg import (
    Mat,
    Subspace,
    column_space,
    format_matrix,
    null_space,
    parse_matrix,
    rank,
    row_space,
    solve,
    vec_mat,
)


@dataclass(frozen=True)
class ArrayCode:
    """Immutable array code: generator, layout and associated subspaces."""

    field: object
    b: int
    n: int
    M: int
    generator: Mat
    subspaces: tuple[Subspace, ...]
    provenance: str

    def thick_column(self, j: int) -> Mat:
        """The M x b slice of the generator for node j (0-based)."""
        if not 0 <= j < self.n:
            raise OutOfRange(f"column {j} outside 0..{self.n - 1}")
        cols = range(j * self.b, (j + 1) * self.b)
        return Mat(
            self.field,
            tuple(tuple(r[c] for c in cols) for r in self.generator.rows),
            self.b,
        )

    def column_vector(self, i: int, j: int) -> tuple[int, ...]:
        """Generator column for symbol i of node j, as a length-M vector."""
        if not 0 <= i < self.b:
            raise OutOfRange(f"symbol row {i} outside 0..{self.b - 1}")
        if not 0 <= j < self.n:
            raise OutOfRange(f"column {j} outside 0..{self.n - 1}")
        return self.generator.column(j * self.b + i)


def code_from_subspaces(field, subspaces, b: int, M: int, provenance: str) -> ArrayCode:
    """Assemble the array code whose thick columns span the given subspaces."""
    subspaces = tuple(subspaces)
    if not subspaces:
        raise BadParams("need at least one associated subspace")
    for s in subspaces:
        if s.field != field or s.ambient != M:
            raise AmbientMismatch(
                f"subspace of gf({s.field.q})^{s.ambient} in a code over gf({field.q})^{M}"
            )
        if s.dim > b:
            raise DimensionTooLarge(f"subspace dimension {s.dim} exceeds column width b={b}")
    rows = [[] for _ in range(M)]
    for s in subspaces:
        for c in range(b):
            col = s.basis[c] if c < s.dim else (0,) * M
            for r in range(M):
                rows[r].append(col[r])
    generator = Mat(field, tuple(tuple(r) for r in rows), b * len(subspaces))
    if rank(generator) != M:
        raise BadParams(
            f"associated subspaces span a {rank(generator)}-dim space, code needs the full {M}"
        )
    return ArrayCode(field, b, len(subspaces), M, generator, subspaces, provenance)


# --- constructions ------------------------------------------------------------


def construction_all_subspaces(field, M: int, b: int, *, limit: int | None = None) -> ArrayCode:
    """One thick column per b-dim subspace of GF(q)^M."""
    if not 1 <= b <= M:
        raise OutOfRange(f"need 1 <= b <= M, got b={b}, M={M}")
    subs = enumerate_grassmannian(field, M, b, limit=limit)
    return code_from_subspaces(
        field, subs, b, M, f"all-subspaces q={field.q} M={M} b={b}"
    )


def construction_spread(field, M: int, b: int, method: str = "gabidulin-echelon") -> ArrayCode:
    """One thick column per block of a b-spread of GF(q)^M."""
    design = build_spread(field, M, b, method)
    return code_from_subspaces(
        field,
        design.blocks,
        b,
        M,
        f"spread q={field.q} M={M} b={b} method={method}",
    )


def construction_from_blocks(field, blocks, *, provenance: str | None = None) -> ArrayCode:
    """Array code from a user-supplied block set (validated, not trusted)."""
    blocks = tuple(blocks)
    if not blocks:
        raise BadParams("empty block set")
    dims = {blk.dim for blk in blocks}
    if len(dims) != 1:
        raise MixedDimensions(f"blocks mix dimensions {sorted(dims)}")
    if len(set(blocks)) != len(blocks):
        seen = set()
        for i, blk in enumerate(blocks):
            if blk in seen:
                raise DuplicateBlock(f"block {i} repeats an earlier block")
            seen.add(blk)
    b = dims.pop()
    M = blocks[0].ambient
    return code_from_subspaces(
        field, blocks, b, M, provenance or f"blocks q={field.q} M={M} b={b} count={len(blocks)}"
    )


def construction_std(
    field, t: int, b: int, M: int, scope: str, class_index: int = 0
) -> ArrayCode:
    """Array code from a subspace transversal design on GF(q)^M, M = b + m.

    scope "par" uses the blocks of one parallel class (n = q^(M-b));
    scope "full" uses every block (n = q^((M-b) t)).
    """
    m = M - b
    if not 1 <= t <= b <= m:
        raise BadParams(f"need 1 <= t <= b <= M - b, got t={t}, b={b}, M={M}")
    design = build_std(field, t, b, m)
    if scope == "par":
        if not 0 <= class_index < len(design.classes):
            raise OutOfRange(
                f"class index {class_index} outside 0..{len(design.classes) - 1}"
            )
        blocks = [design.blocks[i] for i in design.classes[class_index]]
        tag = f"std-par q={field.q} t={t} b={b} M={M} class={class_index}"
    elif scope == "full":
        blocks = list(design.blocks)
        tag = f"std-full q={field.q} t={t} b={b} M={M}"
    else:
        raise BadParams(f"scope must be 'par' or 'full', got {scope!r}")
    return code_from_subspaces(field, blocks, b, M, tag)


# --- encoding and weights -----------------------------------------------------


def encode(code: ArrayCode, message) -> Mat:
    """Codeword array for a message vector of length M."""
    message = tuple(message)
    if len(message) != code.M:
        raise DimensionMismatch(f"message length {len(message)}, expected {code.M}")
    flat = vec_mat(message, code.generator)
    rows = tuple(
        tuple(flat[j * code.b + i] for j in range(code.n)) for i in range(code.b)
    )
    return Mat(code.field, rows, code.n)


def weight(codeword: Mat) -> int:
    """Number of nonzero columns of a codeword array."""
    return sum(1 for j in range(codeword.cols) if any(r[j] for r in codeword.rows))


def is_codeword(code: ArrayCode, codeword: Mat) -> bool:
    if codeword.nrows != code.b or codeword.cols != code.n:
        raise DimensionMismatch(
            f"array is {codeword.nrows}x{codeword.cols}, code is {code.b}x{code.n}"
        )
    flat = tuple(
        codeword.rows[i][j] for j in range(code.n) for i in range(code.b)
    )
    return solve(code.generator.transpose(), flat) is not None


def _gray_digits(s: int, q: int, M: int) -> list[int]:
    d = []
    for _ in range(M + 1):
        d.append(s % q)
        s //= q
    return [(d[i] - d[i + 1]) % q for i in range(M)]


def _flat_weight(flat: list[int], b: int, n: int) -> int:
    w = 0
    for j in range(0, b * n, b):
        if any(flat[j : j + b]):
            w += 1
    return w


def _scan_range(field, rows, b: int, n: int, lo: int, hi: int, stop_at: int | None = None):
    """Weight histogram of the messages with Gray indices in [lo, hi).

    Gray index s maps to the message whose i-th coordinate is the i-th
    modular Gray digit of s; step s flips digit v_q(s) up by one, so the
    running codeword needs one scaled row addition per step. Returns
    (histogram, min nonzero weight or None); stop_at aborts the range scan
    once a weight <= stop_at is seen (used only with a proven lower bound).
    """
    q = field.q
    M = len(rows)
    digits = _gray_digits(lo, q, M)
    flat = [0] * (b * n)
    for g, row in zip(digits, rows):
        if g:
            for idx, x in enumerate(row):
                if x:
                    flat[idx] = field.add(flat[idx], field.mul(g, x))
    hist: dict[int, int] = {}
    best: int | None = None
    scaled: dict[tuple[int, int], list[int]] = {}

    def account(s: int) -> bool:
        nonlocal best
        w = _flat_weight(flat, b, n)
        hist[w] = hist.get(w, 0) + 1
        if s != 0 and (best is None or w < best):
            best = w
            if stop_at is not None and best <= stop_at:
                return True
        return False

    if account(lo):
        return hist, best
    for s in range(lo + 1, hi):
        k = 0
        x = s
        while x % q == 0:
            x //= q
            k += 1
        old = digits[k]
        new = (old + 1) % q
        digits[k] = new
        delta = field.sub(new, old)
        key = (k, delta)
        srow = scaled.get(key)
        if srow is None:
            srow = [field.mul(delta, v) for v in rows[k]]
            scaled[key] = srow
        for idx, v in enumerate(srow):
            if v:
                flat[idx] = field.add(flat[idx], v)
        if account(s):
            break
    return hist, best


def _scan_worker(args):
    descriptor, rows, b, n, lo, hi = args
    field = parse_field(descriptor)
    hist, _ = _scan_range(field, rows, b, n, lo, hi)
    return hist


def weight_distribution(
    code: ArrayCode, *, limit: int | None = None, chunks: int = 1, jobs: int = 1
) -> dict[int, int]:
    """Exact weight histogram over all q^M codewords.

    chunks splits the Gray index space into independently scanned ranges
    (merged by addition; the result is partition-independent); jobs > 1
    fans the ranges over a process pool.
    """
    total = code.field.q**code.M
    guard(total, f"scanning {total} codewords", limit)
    chunks = max(chunks, jobs, 1)
    bounds = [total * i // chunks for i in range(chunks + 1)]
    ranges = [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
    rows = code.generator.rows
    merged: dict[int, int] = {}
    if jobs > 1 and isinstance(code.field, FieldContext) and len(ranges) > 1:
        tasks = [
            (code.field.descriptor(), rows, code.b, code.n, lo, hi) for lo, hi in ranges
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_worker, tasks))
    else:
        parts = [
            _scan_range(code.field, rows, code.b, code.n, lo, hi)[0] for lo, hi in ranges
        ]
    for part in parts:
        for w, c in part.items():
            merged[w] = merged.get(w, 0) + c
    return dict(sorted(merged.items()))


def min_distance(code: ArrayCode, *, limit: int | None = None, stop_at: int | None = None) -> int:
    """Exact minimum weight over nonzero codewords.

    stop_at, when given, must be a proven lower bound on the distance; the
    scan then stops early as soon as it is attained.
    """
    total = code.field.q**code.M
    guard(total, f"scanning {total} codewords", limit)
    _, best = _scan_range(
        code.field, code.generator.rows, code.b, code.n, 0, total, stop_at=stop_at
    )
    assert best is not None
    return best


# --- duality, MDS, perfectness -------------------------------------------------


def dual(code: ArrayCode) -> ArrayCode:
    """The array code generated by the kernel of the generator, same layout."""
    kernel = null_space(code.generator)
    if kernel.dim == 0:
        raise BadParams("dual code is trivial (generator has full column count)")
    gen = Mat(code.field, kernel.basis, code.b * code.n)
    subspaces = tuple(
        column_space(
            Mat(
                code.field,
                tuple(tuple(r[c] for c in range(j * code.b, (j + 1) * code.b)) for r in gen.rows),
                code.b,
            )
        )
        for j in range(code.n)
    )
    return ArrayCode(
        code.field,
        code.b,
        code.n,
        kernel.dim,
        gen,
        subspaces,
        f"dual({code.provenance})",
    )


def dual_distance_by_supports(code: ArrayCode, *, max_weight: int | None = None) -> int:
    """Minimum weight of the dual code, via thick-column support search.

    A dual codeword of weight w exists exactly when some w thick columns of
    the primal generator carry linearly dependent flat columns, so the
    search grows candidate supports by size and stops at the first
    dependency. Any support of size > M/b is automatically dependent, which
    bounds the search depth.
    """
    b, n, M = code.b, code.n, code.M
    gen = code.generator
    cap = n if max_weight is None else min(max_weight, n)
    for w in range(1, cap + 1):
        if w * b > M:
            # more flat columns than the ambient dimension: always dependent
            return w
        for support in combinations(range(n), w):
            cols = []
            for j in support:
                for i in range(b):
                    cols.append(gen.column(j * b + i))
            m = Mat(code.field, tuple(cols), M)
            if rank(m) < w * b:
                return w
    raise TooLarge(f"no dual codeword of weight <= {cap} found")


def is_mds(code: ArrayCode, *, distance: int | None = None, limit: int | None = None) -> bool:
    """Whether d = n - M/b + 1; requires b | M."""
    if code.M % code.b:
        raise NotDivisible(f"MDS test needs b | M, got b={code.b}, M={code.M}")
    d = min_distance(code, limit=limit) if distance is None else distance
    return d == code.n - code.M // code.b + 1


@dataclass(frozen=True)
class PerfectnessResult:
    phi1: int
    covered: int
    space: int
    ratio: Fraction
    is_perfect: bool


def perfectness(code: ArrayCode) -> PerfectnessResult:
    """Exact radius-1 ball-covering ratio |C| * phi1 / q^(bn).

    phi1 counts the arrays within column distance 1 of a fixed codeword:
    1 + n (q^b - 1).
    """
    q = code.field.q
    phi1 = 1 + code.n * (q**code.b - 1)
    covered = q**code.M * phi1
    space = q ** (code.b * code.n)
    ratio = Fraction(covered, space)
    return PerfectnessResult(phi1, covered, space, ratio, ratio == 1)


# --- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class CodeReport:
    parameters: dict
    full_column_rank: bool
    distance: int | None
    weight_distribution: dict[int, int] | None
    mds: bool | None
    perfect: bool
    phi1: int
    ratio_num: int
    ratio_den: int
    notes: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "parameters": self.parameters,
            "full_column_rank": self.full_column_rank,
            "distance": self.distance,
            "weight_distribution": (
                None
                if self.weight_distribution is None
                else {str(k): v for k, v in sorted(self.weight_distribution.items())}
            ),
            "mds": self.mds,
            "perfect": self.perfect,
            "phi1": self.phi1,
            "ratio_num": self.ratio_num,
            "ratio_den": self.ratio_den,
            "notes": list(self.notes),
        }


def analyze_code(
    code: ArrayCode,
    *,
    with_distance: bool = True,
    with_weights: bool = True,
    limit: int | None = None,
    jobs: int = 1,
) -> CodeReport:
    """Assemble the per-code report; oversize scans degrade to notes, never crash."""
    notes: list[str] = []
    dist: int | None = None
    wd: dict[int, int] | None = None
    if with_weights:
        try:
            wd = weight_distribution(code, limit=limit, jobs=jobs)
            nonzero = [w for w in wd if w > 0]
            dist = min(nonzero) if nonzero else None
        except TooLarge as exc:
            notes.append(f"weight distribution skipped: {exc}")
    if dist is None and with_distance:
        try:
            dist = min_distance(code, limit=limit)
        except TooLarge as exc:
            notes.append(f"distance skipped: {exc}")
    mds: bool | None = None
    if dist is not None and code.M % code.b == 0:
        mds = is_mds(code, distance=dist)
    elif code.M % code.b:
        notes.append(f"MDS undefined: b={code.b} does not divide M={code.M}")
    perf = perfectness(code)
    return CodeReport(
        parameters={
            "q": code.field.q,
            "b": code.b,
            "n": code.n,
            "M": code.M,
            "provenance": code.provenance,
        },
        full_column_rank=all(s.dim == code.b for s in code.subspaces),
        distance=dist,
        weight_distribution=wd,
        mds=mds,
        perfect=perf.is_perfect,
        phi1=perf.phi1,
        ratio_num=perf.ratio.numerator,
        ratio_den=perf.ratio.denominator,
        notes=tuple(notes),
    )


# --- bundle format --------------------------------------------------------------


def format_bundle(code: ArrayCode) -> str:
    lines = [
        "bundle array-code",
        f"field {code.field.descriptor()}",
        f"b {code.b}",
        f"n {code.n}",
        f"M {code.M}",
        f"provenance {code.provenance}",
        "generator",
        format_matrix(code.generator).rstrip("\n"),
        f"subspaces {code.n}",
    ]
    for s in code.subspaces:
        lines.append(format_matrix(s.matrix()).rstrip("\n"))
    return "\n".join(lines) + "\n"


def write_bundle(code: ArrayCode, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_bundle(code))


def parse_bundle(text: str) -> ArrayCode:
    """Parse and validate a code bundle; raises Inconsistent on bad data."""
    lines = [ln for ln in (raw.rstrip() for raw in text.splitlines()) if ln.strip()]
    try:
        if lines[0] != "bundle array-code":
            raise Inconsistent(f"not a code bundle: first line {lines[0]!r}")
        field = parse_field(lines[1].split(None, 1)[1])
        b = int(lines[2].split()[1])
        n = int(lines[3].split()[1])
        M = int(lines[4].split()[1])
        provenance = lines[5].split(None, 1)[1] if len(lines[5].split(None, 1)) > 1 else ""
        if lines[6] != "generator":
            raise Inconsistent("bundle missing the generator section")
        gen_rows = int(lines[7].split()[1])
        gen = parse_matrix("\n".join(lines[7 : 8 + gen_rows]), field)
        pos = 8 + gen_rows
        if not lines[pos].startswith("subspaces"):
            raise Inconsistent("bundle missing the subspaces section")
        count = int(lines[pos].split()[1])
        pos += 1
        subs = []
        for _ in range(count):
            nrows = int(lines[pos].split()[1])
            mat = parse_matrix("\n".join(lines[pos : pos + 1 + nrows]), field)
            subs.append(row_space(mat))
            pos += 1 + nrows
    except (IndexError, ValueError) as exc:
        raise Inconsistent(f"malformed code bundle: {exc}") from exc

    if gen.nrows != M or gen.cols != b * n or count != n:
        raise Inconsistent(
            f"bundle shapes disagree: generator {gen.nrows}x{gen.cols}, declared M={M}, b={b}, n={n}"
        )
    code = ArrayCode(field, b, n, M, gen, tuple(subs), provenance)
    if rank(gen) != M:
        raise Inconsistent(f"generator rank {rank(gen)} differs from declared dimension {M}")
    for j, s in enumerate(code.subspaces):
        if column_space(code.thick_column(j)) != s:
            raise Inconsistent(f"thick column {j + 1} does not span its declared subspace")
    return code


def read_bundle(path: str) -> ArrayCode:
    with open(path, encoding="ascii") as fh:
        return parse_bundle(fh.read())
