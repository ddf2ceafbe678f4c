import pytest

from addnf.logics import bao_instance, gf_instance, modal_k_instance, propositional_instance


@pytest.fixture(scope="session")
def prop_inst():
    return propositional_instance()


@pytest.fixture(scope="session")
def modal_inst():
    return modal_k_instance()


@pytest.fixture(scope="session")
def gf_rs():
    """R binary plus S unary over {u, v}."""
    return gf_instance(("u", "v"), {"R": 2, "S": 1})


@pytest.fixture(scope="session")
def gf_r():
    """One binary relation over {u, v}."""
    return gf_instance(("u", "v"), {"R": 2})


@pytest.fixture(scope="session")
def bao_x():
    """One unary operator over a single variable x."""
    return bao_instance({"f": 1}, (), ("x",))


@pytest.fixture(scope="session")
def bao_xy():
    return bao_instance({"f": 1}, (), ("x", "y"))
