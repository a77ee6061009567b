# filled by test_acceptance, printed in the pytest terminal summary
ACCEPTANCE_LINES: list[str] = []
