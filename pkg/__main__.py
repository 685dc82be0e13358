"""The main execution script for this package for testing."""

from dag_zeropad._app.cli import main

# execute the main entry point of the CLI
main()
