"""Entry point for grouplab.

Command line:
    python main.py info --group sym:4
    python main.py scan --builtin-max-order 64 --statements all --json

HTTP API:
    python main.py serve
    uvicorn app.main:app --reload
"""
import sys

from app.cli import main

if __name__ == '__main__':
    sys.exit(main())
