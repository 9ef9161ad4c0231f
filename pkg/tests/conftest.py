import pytest

from collatzkit.cli import main as cli_main


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process and capture (exit_code, stdout, stderr)."""

    def run(*argv):
        try:
            code = cli_main(list(argv))
        except SystemExit as exc:
            code = exc.code if exc.code is not None else 0
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run
