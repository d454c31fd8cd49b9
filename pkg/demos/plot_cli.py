"""
Driving the command line tool
=============================

The ``hankelcos`` command evaluates, sweeps and fits, and reports as CSV or
JSON.  The exit status is 0 when every record meets its tolerance.
"""

import subprocess
import sys


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "hankelcos.cli", *args], capture_output=True, text=True)
    print("$ hankelcos", " ".join(args), f"   -> exit {proc.returncode}")
    print(proc.stdout.rstrip() or proc.stderr.rstrip())
    print()


run("eval", "--k", "1,-0.1", "--w", "0.5", "--method", "all")
run("sweep", "--k", "2,-0.5", "--w-range", "0:6:1.5", "--format", "json")
run("hankel", "--z", "3,-2", "--z", "15,-4")
run("fit-cd")
# malformed input is a usage error
run("eval", "--k", "oops", "--w", "1")
