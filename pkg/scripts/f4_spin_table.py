"""Dominant spin weights of B3 and the F4 noncubic kernel blocks on the 26-dimensional module."""
import sys

from dirac_kernels.cli import JobSpec, run

if __name__ == "__main__":
    out, code = run(JobSpec("f4-table", "", {}, "markdown"))
    sys.stdout.write(out.decode())
    sys.exit(code)
