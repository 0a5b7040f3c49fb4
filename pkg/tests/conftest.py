import pytest

from homring import verify


@pytest.fixture(scope="session")
def verify_report():
    """Run the built-in verification suite once and share the report."""
    return verify.run()
