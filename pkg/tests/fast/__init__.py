# Fast unit tests
