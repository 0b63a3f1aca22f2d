"""Parser for the group-definition text format.

Sections, in any order, '#' comments allowed anywhere:

    [group]            name, generators (chain order), optional parameters
    [coproduct]        one line per non-primitive generator:
                           V = X (x) Y + 1/2 X (x) Y^2
    [lie]              optional bracket table, lines "i j k p/q" meaning the
                       u_k coefficient of [u_i, u_j]; verified against the
                       brackets derived from the coproducts
    [rmatrix]          lines "i j p/q": antisymmetric entries in the Lie basis
    [subgroup NAME]    params = t1 t2 ...  then   GEN = poly in the params
    [point NAME]       GEN = rational or parameter polynomial
    [cocycle-table]    bound = d  then  MONOMIAL , MONOMIAL = p/q

Everything is whitespace-insensitive; '(x)' separates tensor slots.
"""

from __future__ import annotations

from fractions import Fraction

from .cocycle import RMatrix, TableCocycle
from .hopf import GroupPresentation
from .poly import PolyRing, TensorPoly, parse_poly


class GroupFileError(ValueError):
    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = "line %d: %s" % (line_no, message)
        super().__init__(message)
        self.line_no = line_no


class GroupData:
    """Everything a group file defines."""

    def __init__(self, presentation, rmatrix=None, lie_table=None, table_cocycle=None):
        self.presentation = presentation
        self.rmatrix = rmatrix
        self.lie_table = lie_table
        self.table_cocycle = table_cocycle
        self.cocycle_override = None

    @property
    def name(self):
        return self.presentation.name


def _strip(line):
    if "#" in line:
        line = line[: line.index("#")]
    return line.strip()


def _sections(text):
    current = None
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = (line[1:-1].strip(), no, [])
            out.append(current)
            continue
        if current is None:
            raise GroupFileError("content before any section header", no)
        current[2].append((no, line))
    return out


def _keyvals(lines):
    out = {}
    order = []
    for no, line in lines:
        if "=" not in line:
            raise GroupFileError("expected KEY = VALUE", no)
        key, val = line.split("=", 1)
        key = key.strip()
        out[key] = (no, val.strip())
        order.append(key)
    return out, order


def parse_tensor(text, ring, line_no=None):
    """Parse a sum of 'POLY (x) POLY' terms into a rank-2 tensor."""
    total = TensorPoly.zero(ring, 2)
    # split on top-level +/- while keeping signs with their term
    terms = []
    buf = ""
    sign = 1
    for ch in text:
        if ch in "+-" and buf.strip():
            terms.append((sign, buf))
            buf = ""
            sign = 1 if ch == "+" else -1
        elif ch in "+-" and not buf.strip():
            sign = sign if ch == "+" else -sign
        else:
            buf += ch
    if buf.strip():
        terms.append((sign, buf))
    for sign, term in terms:
        if "(x)" not in term:
            raise GroupFileError("tensor term %r lacks the (x) separator" % term.strip(), line_no)
        left, right = term.split("(x)", 1)
        if "(x)" in right:
            raise GroupFileError("only rank-2 tensors are accepted here", line_no)
        lp = parse_poly(left, ring)
        rp = parse_poly(right, ring)
        total = total + TensorPoly.from_polys([lp, rp], Fraction(sign))
    return total


def parse_group_file(text):
    sections = _sections(text)
    heads = [s[0] for s in sections]
    if "group" not in heads:
        raise GroupFileError("missing [group] section")

    name = None
    generators = None
    parameters = ()
    for head, hno, lines in sections:
        if head != "group":
            continue
        kv, _ = _keyvals(lines)
        if "name" in kv:
            name = kv["name"][1]
        if "generators" not in kv:
            raise GroupFileError("[group] must declare generators", hno)
        generators = tuple(kv["generators"][1].replace(",", " ").split())
        if "parameters" in kv:
            parameters = tuple(kv["parameters"][1].replace(",", " ").split())
    pres = GroupPresentation(name or "group", generators, parameters=parameters)

    rmatrix = None
    lie_table = None
    table_cocycle = None
    for head, hno, lines in sections:
        if head == "coproduct":
            for no, line in lines:
                if "=" not in line:
                    raise GroupFileError("expected GEN = tensor", no)
                gen, rhs = line.split("=", 1)
                gen = gen.strip()
                if gen not in pres.ring.index:
                    raise GroupFileError("unknown generator %r" % gen, no)
                pres.set_q(gen, parse_tensor(rhs, pres.ring, no))
        elif head == "lie":
            lie_table = {}
            for no, line in lines:
                parts = line.split()
                if len(parts) != 4:
                    raise GroupFileError("expected 'i j k p/q'", no)
                i, j, k = (int(p) for p in parts[:3])
                lie_table.setdefault((i - 1, j - 1), {})[k - 1] = Fraction(parts[3])
        elif head == "rmatrix":
            entries = {}
            for no, line in lines:
                parts = line.split()
                if len(parts) != 3:
                    raise GroupFileError("expected 'i j p/q'", no)
                i, j = int(parts[0]) - 1, int(parts[1]) - 1
                n = len(pres.ring.generators)
                if not (0 <= i < n and 0 <= j < n) or i == j:
                    raise GroupFileError("r-matrix indices out of range", no)
                if (i, j) in entries or (j, i) in entries:
                    raise GroupFileError(
                        "pair (%d,%d) declared twice; entries are antisymmetric "
                        "and must be given once" % (i + 1, j + 1), no)
                entries[(i, j)] = Fraction(parts[2])
            rmatrix = RMatrix(len(pres.ring.generators), entries)
        elif head.startswith("subgroup"):
            sub_name = head[len("subgroup"):].strip()
            if not sub_name:
                raise GroupFileError("subgroup section needs a name", hno)
            kv, order = _keyvals(lines)
            if "params" not in kv:
                raise GroupFileError("[subgroup %s] must declare params" % sub_name, hno)
            params = tuple(kv["params"][1].replace(",", " ").split())
            tring = PolyRing(params)
            coords = {}
            for key in order:
                if key == "params":
                    continue
                no, val = kv[key]
                if key not in pres.ring.index:
                    raise GroupFileError("unknown generator %r" % key, no)
                coords[key] = parse_poly(val, tring)
            pres.add_subgroup(sub_name, params, coords)
        elif head.startswith("point"):
            pt_name = head[len("point"):].strip()
            if not pt_name:
                raise GroupFileError("point section needs a name", hno)
            kv, order = _keyvals(lines)
            coords = {}
            for key in order:
                no, val = kv[key]
                if key not in pres.ring.index:
                    raise GroupFileError("unknown generator %r" % key, no)
                coords[key] = parse_poly(val, pres.ring)
            pres.add_point(pt_name, coords)
        elif head == "cocycle-table":
            bound = None
            table = {}
            for no, line in lines:
                if line.startswith("bound"):
                    _, val = line.split("=", 1)
                    bound = int(val)
                    continue
                if "=" not in line or "," not in line.split("=", 1)[0]:
                    raise GroupFileError("expected 'MONOMIAL , MONOMIAL = p/q'", no)
                lhs, val = line.split("=", 1)
                m1txt, m2txt = lhs.split(",", 1)
                m1 = _as_monomial(parse_poly(m1txt, pres.ring), no)
                m2 = _as_monomial(parse_poly(m2txt, pres.ring), no)
                table[(m1, m2)] = Fraction(val.strip())
            if bound is None:
                raise GroupFileError("[cocycle-table] must declare bound = d", hno)
            table_cocycle = TableCocycle(pres, table, bound)
        elif head == "group":
            pass
        else:
            raise GroupFileError("unknown section [%s]" % head, hno)

    return GroupData(pres, rmatrix=rmatrix, lie_table=lie_table, table_cocycle=table_cocycle)


def _as_monomial(p, line_no):
    if len(p.terms) != 1:
        raise GroupFileError("expected a single monomial", line_no)
    m, c = next(iter(p.terms.items()))
    if c != 1:
        raise GroupFileError("monomial must have coefficient 1", line_no)
    return m


def verify_lie_table(data):
    """Check a declared bracket table against the q-derived one."""
    if data.lie_table is None:
        return True, None
    lie = data.presentation.lie_data()
    n = lie.n
    for i in range(n):
        for j in range(n):
            declared = [Fraction(0)] * n
            if (i, j) in data.lie_table:
                for k, c in data.lie_table[(i, j)].items():
                    declared[k] += c
            if (j, i) in data.lie_table:
                for k, c in data.lie_table[(j, i)].items():
                    declared[k] -= c
            if i < j or any(declared):
                derived = lie.bracket_basis(i, j)
                if declared != derived:
                    return False, (i + 1, j + 1)
    return True, None


def default_degree_bound(pres):
    """2 * (max polynomial degree of a q-tensor slot entry) + 2."""
    best = 0
    for g, q in pres.q.items():
        for (m1, m2), _ in q.terms.items():
            best = max(best, m1.degree(), m2.degree())
    return 2 * best + 2
