# Common test utilities and fixtures
