import pytest

from pgk.group_core import parse_group_spec

from helpers import build_catalog, build_p_groups, s3_cayley_text


@pytest.fixture(scope="session")
def s3_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cayley") / "s3.txt"
    path.write_text(s3_cayley_text(), encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def s3(s3_file):
    return parse_group_spec(f"file:{s3_file}")


@pytest.fixture(scope="session")
def catalog(s3):
    return build_catalog(s3)


@pytest.fixture(scope="session")
def p_groups():
    return build_p_groups()
