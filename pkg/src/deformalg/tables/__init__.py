"""Loading, serialization, and instantiation of the encoded table rows."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..polycore import Ideal, Ring, nf_linear_solve, parse_poly
from . import data

UNKNOWN_KEY = "unknown-key"


class UnknownKey(KeyError):
    pass


class ModeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class TableRow:
    table_id: str
    row_key: str
    groups: tuple          # ordered (group_name, tuple_of_templates)
    family: str            # "A" or "B" ring family
    shift: tuple           # (a, b, c) shift convention

    def templates(self, include_mon: bool = True):
        out = []
        for name, gens in self.groups:
            if name == "mon" and not include_mon:
                continue
            out.extend(gens)
        return out

    def has_mon(self) -> bool:
        return any(name == "mon" for name, _ in self.groups)

    def existentials(self):
        names = set()
        for t in self.templates():
            for nm in data.EXISTENTIAL_NAMES:
                if nm in t:
                    names.add(nm)
        return sorted(names)

    def serialize(self) -> str:
        parts = [self.table_id, self.row_key]
        for name, gens in self.groups:
            parts.append(f"{name}:" + " ; ".join(gens))
        return " | ".join(parts)


def parse_row(text: str) -> TableRow:
    parts = [p.strip() for p in text.split("|")]
    table_id, row_key = parts[0], parts[1]
    groups = []
    for blob in parts[2:]:
        name, _, rest = blob.partition(":")
        gens = tuple(g.strip() for g in rest.split(";") if g.strip())
        groups.append((name.strip(), gens))
    return TableRow(table_id, row_key, tuple(groups),
                    data.TABLE_FAMILY[table_id], data.TABLE_SHIFT[table_id])


def table_keys(table_id: str):
    if table_id not in data.TABLES:
        raise UnknownKey(f"{UNKNOWN_KEY}: no table {table_id!r}")
    return list(data.TABLES[table_id].keys())


def load_row(table_id: str, row_key: str) -> TableRow:
    if table_id not in data.TABLES:
        raise UnknownKey(f"{UNKNOWN_KEY}: no table {table_id!r}")
    table = data.TABLES[table_id]
    if row_key not in table:
        raise UnknownKey(f"{UNKNOWN_KEY}: table {table_id} has no row {row_key!r}")
    raw = table[row_key]
    groups = tuple((name, tuple(raw[name])) for name in ("height", "divisor", "mon", "gens", "elements")
                   if name in raw)
    return TableRow(table_id, row_key, groups,
                    data.TABLE_FAMILY[table_id], data.TABLE_SHIFT[table_id])


def all_rows():
    for tid in data.TABLES:
        for key in data.TABLES[tid]:
            yield load_row(tid, key)


@dataclass(frozen=True)
class ParamSpec:
    """Numeric parameters fixing one instantiation of the tables.

    abc: one (a, b, c) triple per embedding (already in this table's shift
    convention); mode "formal-P" keeps the uniformizer as a variable,
    "specialize-zero" sends it to 0 (required whenever monodromy rows with
    their mod-p structure constants are used).  dbar are the leading units
    of the three starred diagonal entries.
    """

    p: int
    abc: tuple
    mode: str = "specialize-zero"
    seed: int = 0
    dbar: tuple = (1, 1, 1)

    def __post_init__(self):
        if self.mode not in ("formal-P", "specialize-zero"):
            raise ValueError(f"unknown uniformizer mode {self.mode!r}")
        abc = self.abc
        if abc and isinstance(abc[0], int):
            object.__setattr__(self, "abc", (tuple(abc),))

    @property
    def f(self) -> int:
        return len(self.abc)

    def formal_P(self) -> bool:
        return self.mode == "formal-P"

    def check_generic(self):
        for (a, b, c) in self.abc:
            for d in (a - b, b - c, a - c):
                if d % self.p in (0, 1, self.p - 1):
                    raise ValueError(f"genericity violated for abc={(a, b, c)}")
        return self


@lru_cache(maxsize=None)
def family_ring(family: str, p: int, formal_P: bool = False,
                drop_e11: bool = False, f: int = 1) -> Ring:
    """The presentation ring of a table family, optionally with the formal
    uniformizer and with f tensor factors (variables suffixed _j)."""
    base = data.FAMILY_A_VARS if family == "A" else data.FAMILY_B_VARS
    if drop_e11:
        base = tuple(v for v in base if v != "e11")
    names = []
    for j in range(f):
        suffix = "" if f == 1 else f"_{j}"
        names.extend(v + suffix for v in base)
    if formal_P:
        names.append("P")
    return Ring(p, tuple(names))


def template_env(ring: Ring, pspec: ParamSpec, j: int = 0, shift=(1, 1, 1),
                 constants: dict | None = None):
    """Evaluation environment for row templates at embedding j."""
    suffix = "" if pspec.f == 1 else f"_{j}"
    a, b, c = (x % pspec.p for x in pspec.abc[j])
    env = {"a": a, "b": b, "c": c}
    for i, nm in enumerate(("d11s", "d22s", "d33s")):
        xv = f"x{i + 1}{i + 1}s{suffix}"
        env[nm] = pspec.dbar[i] * (ring.one() + ring.var(xv))
    if pspec.formal_P():
        env["P"] = ring.var("P")
    else:
        env["P"] = 0
    for base in data.FAMILY_A_VARS + data.FAMILY_B_VARS:
        if base + suffix in ring.index:
            env.setdefault(base, ring.var(base + suffix))
    if constants:
        env.update({k: v % pspec.p for k, v in constants.items()})
    return env


def instantiate_ideal(row: TableRow, pspec: ParamSpec, include_mon: bool = False,
                      ring: Ring | None = None, j: int = 0,
                      constants: dict | None = None) -> Ideal:
    """The ideal generated by the row's templates under pspec.

    Generator order follows the printed row; monodromy rows demand
    specialize-zero mode.
    """
    if include_mon and row.has_mon() and pspec.formal_P():
        raise ModeMismatch("monodromy rows require specialize-zero mode")
    if ring is None:
        ring = family_ring(row.family, pspec.p, pspec.formal_P(), f=pspec.f)
    env = template_env(ring, pspec, j, row.shift, constants)
    missing = [nm for nm in row.existentials() if nm not in env]
    if missing:
        raise ValueError(f"unsolved existential constants: {missing}")
    gens = []
    for t in row.templates(include_mon):
        if t.strip() == "e11" and "e11" not in env and "e11" not in ring.index:
            continue  # row used in an e11-free quotient presentation
        gens.append(parse_poly(t, ring, env))
    return Ideal(ring, gens)


def solve_exists_constants(row: TableRow, target: Ideal, pspec: ParamSpec,
                           ring: Ring | None = None, j: int = 0):
    """Solve for the row's existential constants so that each template that
    mentions them lands in `target`; returns {name: value} or None when no
    solution exists.

    Constants are determined per-template by reducing the constant-free
    part and the coefficient polynomials to normal form modulo target.
    """
    if ring is None:
        ring = family_ring(row.family, pspec.p, pspec.formal_P(), f=pspec.f)
    names = row.existentials()
    if not names:
        return {}
    env0 = template_env(ring, pspec, j, row.shift,
                        constants={nm: 0 for nm in names})
    solved = {}
    for t in row.templates():
        used = [nm for nm in names if nm in t]
        if not used:
            continue
        f0 = parse_poly(t, ring, env0)
        coeff_polys = []
        for nm in used:
            env1 = dict(env0)
            env1[nm] = 1
            coeff_polys.append(parse_poly(t, ring, env1) - f0)
        sol = nf_linear_solve([-f0], coeff_polys, target)[0]
        if sol is None:
            return None
        for nm, v in zip(used, sol):
            v = int(v)
            if nm in solved and solved[nm] != v:
                return None
            solved[nm] = v
    return solved


def multitype_ideal(rows, pspec: ParamSpec, include_mon: bool = True,
                    ring: Ring | None = None, j: int = 0) -> Ideal:
    """Iterated intersection of the instantiated per-type ideals."""
    rows = list(rows)
    if not rows:
        raise ValueError("empty type set")
    if ring is None:
        ring = family_ring(rows[0].family, pspec.p, pspec.formal_P(), f=pspec.f)
    ideals = [instantiate_ideal(r, pspec, include_mon, ring=ring, j=j) for r in rows]
    acc = ideals[0]
    for nxt in ideals[1:]:
        acc = acc.intersect(nxt)
    return acc
