import pytest

import galcoh


def test_factor_and_discriminant():
    assert galcoh.factor("-1,0,1") == [("-1,1", 1), ("1,1", 1)]
    assert galcoh.discriminant("7,0,-6,0,1") == "7168"


def test_galois_and_mirror():
    assert galcoh.galois_group("1,1,1,1,1") == "C4"
    assert galcoh.galois_group("7,0,-6,0,1") == "D4"
    m = galcoh.mirror("7,0,-6,0,1")
    assert galcoh.is_isomorphic("|".join(m), "8,0,-12,0,1")


def test_c4_codec():
    assert galcoh.c4_encode(14, "-5/4", "1/2", "3/2") == ["7,0,-6,0,1"]
    d = galcoh.c4_decode("7,0,-6,0,1")
    assert (d["D"], d["a"], d["c"]) == ("14", "-5/4", "3/2")
    assert d["b"] in ("1/2", "-1/2")


def test_c3_encode():
    assert galcoh.c3_encode(5, "1/4,1/4") == ["-1/2,-3,0,1"]


def test_local_and_group():
    assert galcoh.hilbert2("-1", "-1", 0) == -1
    assert galcoh.hilbert2("2", "3", 5) == 1
    assert galcoh.h1_size("S3:C3:sign") == 3


def test_errors():
    with pytest.raises(ValueError):
        galcoh.discriminant("1,2,x")
    with pytest.raises(NotImplementedError):
        galcoh.mirror("1,1,0,0,1")


def test_cli_envelope():
    code, env = galcoh.run_json("local", "hilbert", "--p", "inf", "--a", "-1", "--b", "-1")
    assert code == 0
    assert env["status"] == "ok"
    assert env["schema"] == 1
    code, env = galcoh.run_json("bogus")
    assert code == 64
    assert env["payload"]["code"] == "usage"
