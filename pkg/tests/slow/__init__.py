# Slow integration tests
