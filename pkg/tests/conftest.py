def pytest_terminal_summary(terminalreporter):
    lines = [value
             for key in ("passed", "failed")
             for rep in terminalreporter.stats.get(key, [])
             if rep.when == "call"
             for name, value in rep.user_properties if name == "acceptance"]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
