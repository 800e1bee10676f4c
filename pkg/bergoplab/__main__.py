"""
berg-op-lab main entry point
"""
from bergoplab.cli.main import cli

if __name__ == "__main__":
    cli()
