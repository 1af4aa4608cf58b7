def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-scale runs over hundreds of seeded instances")
