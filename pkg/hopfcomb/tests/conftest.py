def pytest_configure(config):
    config.addinivalue_line("markers", "slow: sweeps at the full degree limits (deselect with -m 'not slow')")
