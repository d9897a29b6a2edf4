import pytest

from shivariety import affine_weyl_group, root_system

RANK2 = ["A2", "B2", "G2"]
SMALL = ["A2", "B2", "G2", "A3", "B3", "C3"]
BUILT = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5",
         "E6", "E7", "E8", "F4", "G2"]


@pytest.fixture(scope="session")
def group_of():
    return lambda label: affine_weyl_group(root_system(label))
