"""The `config` package provides classes for handling the configuration of runs.

It contains:
- `Config(values, options, strict)` - A set of named run parameters.
- `ConfigOption(name, default, mapper, choices, description)` - A named run parameter.
- `format_option_value(value)` - Gives the text of a value, as written in a configuration file.
- `parse_lines(lines, source)` - Parses a flat "key=value" text block.
- `read_lines(filename)` - Reads the lines of a configuration file.
- `RunConfig(config)` - The strict configuration of a command line run.
- `parse_spec_lines(lines, source)` - Parses a spec block into a Bernstein function.
- `read_spec_file(filename)` - Reads a spec file.
- `format_spec(spec)` - Serializes a Bernstein function to the lines of a spec file.

Examples:
```python
from cerbernetix.bernstein.config import ConfigOption, RunConfig, read_spec_file

# Options cast their raw values
tol = ConfigOption("tol", 1e-8, mapper=float)
tol.set("1e-10")
print(tol.get())  # 1e-10

# The configuration of a run is strict, unknown keys are fatal
config = RunConfig()
config.load_file("run.cfg")
print(config.T, config.M, config.digest())

# The Bernstein function of the run
spec = read_spec_file(config.spec)
```
"""
from cerbernetix.bernstein.config.config import COMMENT, Config, parse_lines, read_lines
from cerbernetix.bernstein.config.config_option import ConfigOption, format_option_value
from cerbernetix.bernstein.config.run_config import MODES, RunConfig, run_options
from cerbernetix.bernstein.config.spec_file import (
    COMMON_KEYS,
    FAMILY_KEYS,
    format_spec,
    parse_spec_lines,
    read_spec_file,
)
