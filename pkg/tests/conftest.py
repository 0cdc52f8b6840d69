from hypothesis import settings


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long running checks over whole graph catalogs")


settings.register_profile("grothmodt", deadline=None, max_examples=40)
settings.load_profile("grothmodt")
