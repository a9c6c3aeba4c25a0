"""Cubic vs noncubic kernels on the standard module of sl(4) for four subalgebras."""
from dirac_kernels.oracle.verify import table1

if __name__ == "__main__":
    result = table1()
    print("| h | dim ker D | dim ker D-hat | relation | expected | ok |")
    print("|---|---|---|---|---|---|")
    for row in result["details"]:
        print(f"| {row['h']} | {row['dim_cubic']} | {row['dim_noncubic']} | {row['relation']} | "
              f"{' or '.join(row['expected'])} | {'yes' if row['pass'] else 'NO'} |")
