"""The `cli` package provides the `bernstein` command line.

It contains:
- `run(argv)` - Runs a command and gives its exit code.
- `main()` - Runs the command line of the process and exits.
- `build_parser()` - Builds the parser of the commands and their flags.
- `load_config(args)` - Builds the configuration of a run from the defaults, a file and the flags.
- `RunContext` - The command, the configuration and the Bernstein function of a run.
- `run_checks(spec, pair, grid, tol, seed)` - Runs the invariant suite of the `verify` command.
- `COMMANDS` - The commands by name: sonine, verify, solve-ivp, resolve, evolve, lifetime-lt,
simulate, compare.

Examples:
```python
from cerbernetix.bernstein.cli import run

code = run(["sonine", "--spec", "stable05.cfg", "--T", "1", "--M", "1024"])
print(code)     # 0, the table is in sonine.csv with q in its footer
```
"""
from cerbernetix.bernstein.cli.checks import CheckResult, run_checks
from cerbernetix.bernstein.cli.commands import COMMANDS
from cerbernetix.bernstein.cli.context import RunContext, summary_path, versions
from cerbernetix.bernstein.cli.app import EXIT_DOMAIN, EXIT_NUMERICS, EXIT_OK, main, run
from cerbernetix.bernstein.cli.parser import build_parser, load_config
