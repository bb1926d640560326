import pytest

from torsym.catalog import (
    FAMILIES, UNKNOTTED_NOTE, Tag, build, family, supergroup_checks, verify, verify_family_sweep,
)
from torsym.errors import ConstraintViolated
from torsym.isometry import IDENTITY_MAP, quotient_group
from torsym.pgraph import INFINITE


def test_family_table():
    assert len(FAMILIES) == 9
    assert FAMILIES[Tag.PCU].m_forms == ("n3", "2n3", "4n3")
    assert FAMILIES[Tag.DIA].m_forms == ("n3", "4n3", "16n3")
    assert FAMILIES[Tag.HEX].m_forms == ("n2", "3n2")
    assert [t for t, f in FAMILIES.items() if f.constraint == "odd"] == [Tag.PCU_C, Tag.DIA_C, Tag.SRS4, Tag.SRS8]
    assert FAMILIES[Tag.SRS27].constraint == "not3"
    assert family("srs27") is FAMILIES[Tag.SRS27]
    with pytest.raises(KeyError):
        family("XYZ")


def test_build_examples():
    inst = build(Tag.PCU, 1, "n3")
    assert (inst.expected.genus, inst.expected.order) == (3, 24)
    with pytest.raises(ConstraintViolated, match="3∤n"):
        build(Tag.SRS27, 3)
    with pytest.raises(ConstraintViolated, match="odd n"):
        build(Tag.PCU_C, 2)
    inst = build(Tag.HEX, 1, "3n2")
    assert (inst.m, inst.expected.genus, inst.expected.order) == (3, 4, 36)
    with pytest.raises(ValueError):
        build(Tag.PCU_C, 1, "2n3")


def test_verify_examples():
    r = verify(build(Tag.DIA, 1, "n3"))
    assert r.passed
    c = r.computed
    assert (c["connected"], c["chi"], c["genus"], c["order"], c["certificate"], c["lift_components"]) == (
        True, -2, 3, 24, "INCONCLUSIVE", 1)
    assert UNKNOTTED_NOTE in r.notes
    r = verify(build(Tag.PCU_C, 1))
    assert r.passed and r.computed["genus"] == 3 and r.computed["order"] == 24
    assert r.computed["knotted"] and r.computed["lift_components"] == 2
    assert UNKNOTTED_NOTE not in r.notes
    r = verify(build(Tag.SRS, 2, "n3"))
    assert r.passed and r.computed["genus"] == 17 and r.computed["order"] == 192


def test_verify_records_failures_instead_of_raising():
    inst = build(Tag.PCU, 1)
    broken = inst.__class__(**{**inst.__dict__, "group": FAMILIES[Tag.DIA].group(inst.sub)})
    r = verify(broken)
    assert not r.passed
    assert r.notes  # the NotNormal failure is recorded


def test_sweep_examples():
    reps = verify_family_sweep(Tag.PCU, 2)
    assert len(reps) == 6 and all(r.passed for r in reps)
    assert len(verify_family_sweep(Tag.HEX, 1)) == 2
    reps = verify_family_sweep(Tag.DIA_C, 2)
    assert {r.n for r in reps if not r.skipped} == {1}
    assert all(r.skipped for r in reps if r.n == 2)


def test_lift_counts_per_family():
    want = {Tag.PCU: 1, Tag.DIA: 1, Tag.SRS: 1, Tag.PCU_C: 2, Tag.DIA_C: 2, Tag.SRS4: 4,
            Tag.SRS8: 8, Tag.SRS27: 27, Tag.HEX: INFINITE}
    for tag, count in want.items():
        r = verify(build(tag, 1))
        assert r.computed["lift_components"] == count
        assert r.computed["knotted"] == FAMILIES[tag].knotted


def test_supergroup_chain_pcu():
    sg = supergroup_checks(build(Tag.PCU, 1))
    assert [c["order"] for c in sg["chain"][:3]] == [24, 48, 96]
    assert sg["passed"]
    chars = {g["generator"]: g for g in sg["generators"]}
    assert chars["t_1/2"]["character"] == 1 and chars["t_1/2"]["swaps_sides"]
    assert chars["inversion"]["character"] == -1 and chars["inversion"]["preserves_graph"]


def test_supergroup_chain_dia():
    sg = supergroup_checks(build(Tag.DIA, 1))
    assert sg["chain"][1]["group"] == "P4_232" and sg["chain"][1]["index_two"]
    assert sg["chain"][2]["order"] == 96
    assert sg["arithmetic"]["E(Π_g)=24(g-2)"]


def test_supergroup_chain_srs_uses_mirror_partner():
    sg = supergroup_checks(build(Tag.SRS, 1))
    assert sg["passed"] and sg["chain"][-1]["order"] == 48
    inv = sg["generators"][0]
    assert inv["character"] == -1 and not inv["preserves_graph"]


def test_identity_extension_keeps_order():
    inst = build(Tag.PCU, 1)
    assert quotient_group(inst.group.extended(IDENTITY_MAP)).order == quotient_group(inst.group).order


def test_supergroups_only_for_listed_families():
    with pytest.raises(ValueError):
        supergroup_checks(build(Tag.HEX, 1))
