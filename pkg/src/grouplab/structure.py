"""Structural series and predicates: derived/central/chief series, solubility,
supersolubility, nilpotency, p-nilpotency, simplicity, quasisimplicity,
components and the layer."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .context import GroupContext, context_of, subgroup_sort_key
from .groups import Group, closure
from .perms import Permutation

__all__ = [
    "Series",
    "ChiefFactor",
    "series",
    "predicate",
    "chief_factors",
    "components",
    "layer",
    "generalized_fitting",
]


@dataclass(frozen=True)
class Series:
    kind: str
    chain: tuple[Group, ...]

    def factor_orders(self) -> tuple[int, ...]:
        orders = [g.order for g in self.chain]
        if orders and orders[0] < orders[-1]:  # ascending
            return tuple(b // a for a, b in zip(orders, orders[1:]))
        return tuple(a // b for a, b in zip(orders, orders[1:]))


@dataclass(frozen=True)
class ChiefFactor:
    upper: Group
    lower: Group
    centralizer: Group
    order: int


def derived_subgroup(ctx: GroupContext, K: Group) -> Group:
    comms = [g.inverse() * h.inverse() * g * h
             for g in K.generators for h in K.generators]
    H = ctx.generated(comms) if comms else ctx.trivial_subgroup()
    return ctx.normal_closure_in(K, H)


def _commutator_subgroup(ctx: GroupContext, A: Group, B: Group) -> Group:
    comms = [a.inverse() * b.inverse() * a * b
             for a in A.generators for b in B.generators]
    H = ctx.generated(comms) if comms else ctx.trivial_subgroup()
    return ctx.normal_closure_in(ctx.group, H)


def series(G: Group, kind: str) -> Series:
    """derived | lower_central | upper_central | chief."""
    ctx = context_of(G)
    if kind == "derived":
        chain = [G]
        while True:
            nxt = derived_subgroup(ctx, chain[-1])
            if nxt.order == chain[-1].order:
                break
            chain.append(nxt)
        return Series("derived", tuple(chain))
    if kind == "lower_central":
        chain = [G]
        while True:
            nxt = _commutator_subgroup(ctx, G, chain[-1])
            if nxt.order == chain[-1].order:
                break
            chain.append(nxt)
        return Series("lower_central", tuple(chain))
    if kind == "upper_central":
        chain = [ctx.trivial_subgroup()]
        while True:
            nxt = _center_over(ctx, chain[-1])
            if nxt.order == chain[-1].order:
                break
            chain.append(nxt)
        return Series("upper_central", tuple(chain))
    if kind == "chief":
        chain = [ctx.trivial_subgroup()]
        normals = ctx.normal_subgroups()
        while chain[-1].order < G.order:
            cur = chain[-1]
            cset = cur.element_set()
            # minimal normal subgroups of G/cur, pulled back: normals M > cur
            # with nothing normal strictly between
            candidates = []
            for M in normals:
                if M.order <= cur.order or not cset < M.element_set():
                    continue
                if any(cset < L.element_set() < M.element_set()
                       for L in normals):
                    continue
                candidates.append(M)
            candidates.sort(key=subgroup_sort_key)
            chain.append(candidates[0])
        return Series("chief", tuple(chain))
    raise ValueError(f"unknown series kind: {kind!r}")


def _center_over(ctx: GroupContext, Z: Group) -> Group:
    """Preimage in G of the center of G/Z."""
    zset = Z.element_set()
    out = []
    for g in ctx.group.elements():
        ginv = g.inverse()
        if all((ginv * h.inverse() * g * h) in zset for h in ctx.group.generators):
            out.append(g)
    return ctx.subgroup(out)


def chief_factors(G: Group) -> tuple[ChiefFactor, ...]:
    """Every chief factor of G: all pairs (K, H) of normals with H/K minimal
    normal in G/K, not just the factors of one chief series."""
    ctx = context_of(G)
    out = []
    for lower, upper in ctx.chief_pairs():
        out.append(ChiefFactor(
            upper=upper, lower=lower,
            centralizer=ctx.chief_centralizer(lower, upper),
            order=upper.order // lower.order,
        ))
    return tuple(out)


# ----------------------------------------------------------------------
# predicates

def _pred(ctx: GroupContext, name, fn) -> bool:
    cache = ctx.pred_cache()
    k = (ctx.group.key, name)
    if k not in cache:
        cache[k] = fn()
    return cache[k]


def is_abelian(G: Group) -> bool:
    gens = G.generators
    return all(a * b == b * a for a in gens for b in gens)


def is_cyclic(G: Group) -> bool:
    n = G.order
    return any(e.order() == n for e in G.elements())


def is_p_group(G: Group, p: int) -> bool:
    n = G.order
    while n % p == 0:
        n //= p
    return n == 1


def is_soluble(G: Group) -> bool:
    ctx = context_of(G)
    return _pred(ctx, "soluble",
                 lambda: is_abelian(G)
                 or series(G, "derived").chain[-1].order == 1)


def is_perfect(G: Group) -> bool:
    ctx = context_of(G)
    return _pred(ctx, "perfect",
                 lambda: derived_subgroup(ctx, G).order == G.order)


def is_nilpotent(G: Group) -> bool:
    """Every Sylow subgroup normal, tested via |O_p| = p-part for each p."""
    ctx = context_of(G)

    def check() -> bool:
        if is_abelian(G):
            return True
        return all(ctx.O_p(p).order == ctx.p_part(p) for p in ctx.primes())

    return _pred(ctx, "nilpotent", check)


def is_supersoluble(G: Group) -> bool:
    """Every chief factor of prime order."""
    ctx = context_of(G)

    def check() -> bool:
        if is_abelian(G):
            return True
        return all(_is_prime(upper.order // lower.order)
                   for lower, upper in ctx.chief_pairs())

    return _pred(ctx, "supersoluble", check)


def is_p_nilpotent(G: Group, p: int) -> bool:
    """A normal p-complement exists, tested as |O_{p'}(G)| = |G| / p-part."""
    if p < 2 or not _is_prime(p):
        raise ValueError(f"invalid prime: {p}")
    ctx = context_of(G)
    return _pred(ctx, ("p_nilpotent", p),
                 lambda: ctx.O_pi_prime({p}).order == G.order // ctx.p_part(p))


def is_simple(G: Group) -> bool:
    ctx = context_of(G)
    return _pred(ctx, "simple",
                 lambda: G.order > 1 and len(ctx.normal_subgroups()) == 2)


def is_quasisimple(G: Group) -> bool:
    ctx = context_of(G)

    def check() -> bool:
        if not is_perfect(G) or G.order == 1:
            return False
        qctx, _ = ctx.quotient_ctx(ctx.center())
        return is_simple(qctx.group)

    return _pred(ctx, "quasisimple", check)


def is_quasinilpotent(G: Group) -> bool:
    return generalized_fitting(G).order == G.order


def predicate(G: Group, prop: str, p: Optional[int] = None) -> bool:
    """abelian | cyclic | nilpotent | soluble | supersoluble | p_group |
    p_nilpotent | perfect | simple | quasisimple | quasinilpotent."""
    table = {
        "abelian": lambda: is_abelian(G),
        "cyclic": lambda: is_cyclic(G),
        "nilpotent": lambda: is_nilpotent(G),
        "soluble": lambda: is_soluble(G),
        "supersoluble": lambda: is_supersoluble(G),
        "perfect": lambda: is_perfect(G),
        "simple": lambda: is_simple(G),
        "quasisimple": lambda: is_quasisimple(G),
        "quasinilpotent": lambda: is_quasinilpotent(G),
        "p_group": lambda: is_p_group(G, p),
        "p_nilpotent": lambda: is_p_nilpotent(G, p),
    }
    if prop not in table:
        raise ValueError(f"unknown predicate: {prop!r}")
    return table[prop]()


# ----------------------------------------------------------------------
# components, layer, generalized Fitting subgroup

def components(G: Group) -> tuple[Group, ...]:
    """All subnormal quasisimple subgroups."""
    ctx = context_of(G)
    named = ctx.named_cache()
    if "components" not in named:
        if is_soluble(G):
            named["components"] = ()
        else:
            out = []
            for H in ctx.all_subgroups():
                if H.order < 60 or is_abelian(H):
                    continue
                if not ctx.is_subnormal(H)[0]:
                    continue
                if is_quasisimple(_standalone(H)):
                    out.append(H)
            named["components"] = tuple(out)
    return named["components"]


def _standalone(H: Group) -> Group:
    # predicates on a subgroup use its own context; H is already a Group
    return H


def layer(G: Group) -> Group:
    """E(G): the subgroup generated by all components."""
    ctx = context_of(G)
    named = ctx.named_cache()
    if "layer" not in named:
        gens: list[Permutation] = []
        for C in components(G):
            gens.extend(C.generators)
        named["layer"] = ctx.generated(gens) if gens else ctx.trivial_subgroup()
    return named["layer"]


def generalized_fitting(G: Group) -> Group:
    """F*(G) = F(G) E(G)."""
    ctx = context_of(G)
    named = ctx.named_cache()
    if "generalized_fitting" not in named:
        gens = list(ctx.fitting().generators) + list(layer(G).generators)
        named["generalized_fitting"] = (ctx.generated(gens) if gens
                                        else ctx.trivial_subgroup())
    return named["generalized_fitting"]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
