"""Two spinor monomials that the noncubic operator only kills in sum (sl(4), h = t + roots of e3-e4)."""
import json

from dirac_kernels.oracle.verify import nonpolyn

if __name__ == "__main__":
    print(json.dumps(nonpolyn(), indent=2, sort_keys=True))
