import pytest

from tlrep.catalog import composition_factors, dual, enumerate_indecomposables
from tlrep.errors import DomainError
from tlrep.homology import UNKNOWN, Side, ext_dim, extension_middle, hom_dim, separation_vanishes
from tlrep.orbits import partition
from tlrep.verify import contexts

from conftest import ctx_of
from oracles import TABLE_FIXTURES, ext_table, hom_table, mod, table_modules



@pytest.mark.parametrize("family,n,ell,f,m,other,want", TABLE_FIXTURES)
def test_table_fixture(family, n, ell, f, m, other, want):
    ctx = ctx_of(family, n, ell)
    dim = hom_dim if f == "hom" else ext_dim
    assert dim(mod(ctx, m), mod(ctx, other)) == want


def _table_pairs(max_n, max_ell):
    for ctx in contexts(max_n, max_ell):
        for orb in partition(ctx):
            if orb.critical:
                continue
            names = table_modules(orb)
            alias = {n: mod(ctx, f"{n[0]}{n[1]}") for n in names}
            for a in names:
                for b in names:
                    yield orb, a, b, alias[a], alias[b]


def test_tables_match_transcription():
    for orb, a, b, ma, mb in _table_pairs(10, 5):
        assert hom_dim(ma, mb) == hom_table(orb, a, b), (orb.ctx, a, b)
        assert ext_dim(ma, mb) == ext_table(orb, a, b), (orb.ctx, a, b)


def test_duality_transport_on_tables():
    for _, _, _, ma, mb in _table_pairs(10, 5):
        assert hom_dim(ma, mb) == hom_dim(dual(mb), dual(ma))
        assert ext_dim(ma, mb) == ext_dim(dual(mb), dual(ma))


def test_irreducible_against_zigzag(tl12):
    assert hom_dim(mod(tl12, "I10"), mod(tl12, "B2,2")) == 1
    assert hom_dim(mod(tl12, "I4"), mod(tl12, "B2,2")) == 0
    assert ext_dim(mod(tl12, "I4"), mod(tl12, "B2,2")) == 1


def test_unknown_for_two_long_zigzags(tl12):
    assert hom_dim(mod(tl12, "B2,2"), mod(tl12, "T2,2")) is UNKNOWN
    assert str(UNKNOWN) == "unknown"


def test_blocks_and_criticals_are_orthogonal(dtl12):
    assert hom_dim(mod(dtl12, "P10"), mod(dtl12, "I1")) == 0
    assert ext_dim(mod(dtl12, "I3"), mod(dtl12, "I3")) == 0
    assert hom_dim(mod(dtl12, "I3"), mod(dtl12, "I3")) == 1


def test_separation(tl12):
    assert separation_vanishes(mod(tl12, "I2"), mod(tl12, "I10"))
    assert not separation_vanishes(mod(tl12, "I2"), mod(tl12, "I4"))
    dtl = ctx_of("dtl", 12, 4)
    assert separation_vanishes(mod(dtl, "I0"), mod(dtl, "I1"))


def test_separation_implies_vanishing():
    for ctx in contexts(9, 5):
        classes = enumerate_indecomposables(ctx)
        for m in classes:
            for n in classes:
                if separation_vanishes(m, n):
                    assert hom_dim(m, n) == 0 and ext_dim(m, n) == 0


def test_extension_middles(tl12):
    b22, b23 = mod(tl12, "B2,2"), mod(tl12, "B2,3")
    assert str(extension_middle(b22, mod(tl12, "I12"), Side.QUOT)) == "B(2,3)"
    assert str(extension_middle(b23, mod(tl12, "I10"), Side.SUB)) == "B(2,2) + B(10,1)"
    assert str(extension_middle(b22, mod(tl12, "I4"), Side.SUB)) == "P(4)"
    with pytest.raises(DomainError):
        extension_middle(b22, mod(tl12, "I2"), Side.SUB)


def test_extension_middle_long_zigzags():
    # TL_30 at ell = 3: the orbit of 0 is 0, 4, 6, 10, 12, 16, 18, 22, ...
    ctx = ctx_of("tl", 30, 3)
    assert str(extension_middle(mod(ctx, "B0,7"), mod(ctx, "I10"), Side.QUOT)) == "B(0,3) + T(10,4)"
    assert str(extension_middle(mod(ctx, "B0,6"), mod(ctx, "I10"), Side.QUOT)) == "B(0,3) + T(10,3)"
    assert str(extension_middle(mod(ctx, "B0,6"), mod(ctx, "I12"), Side.SUB)) == "B(0,4) + B(12,2)"
    assert str(extension_middle(mod(ctx, "T0,6"), mod(ctx, "I10"), Side.SUB)) == "T(0,3) + B(10,3)"


def test_extension_middles_account_factors():
    for ctx in contexts(10, 5):
        irreducibles = [m for m in enumerate_indecomposables(ctx) if m.kind.name == "B" and m.l == 0]
        for m in enumerate_indecomposables(ctx):
            if m.kind.name not in "BT" or m.l < 2:
                continue
            for irr in irreducibles:
                if irr.ctx != m.ctx:
                    continue
                for side in Side:
                    sub_first = side is Side.SUB
                    dim = ext_dim(m, irr) if sub_first else ext_dim(irr, m)
                    if dim != 1:
                        continue
                    mid = extension_middle(m, irr, side)
                    assert composition_factors(mid) == composition_factors(m) + composition_factors(irr)
