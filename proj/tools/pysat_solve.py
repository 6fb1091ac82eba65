#!/usr/bin/env python3
"""Solve a DIMACS CNF file with CaDiCaL (python-sat) and print s/v lines."""
import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def main() -> int:
    if len(sys.argv) != 2:
        print("usage: pysat_solve.py FILE.cnf", file=sys.stderr)
        return 2
    cnf = CNF(from_file=sys.argv[1])
    with Solver(name="cadical153", bootstrap_with=cnf.clauses) as s:
        if s.solve():
            print("s SATISFIABLE")
            model = s.get_model() or []
            seen = {abs(l) for l in model}
            model += [-v for v in range(1, cnf.nv + 1) if v not in seen]
            print("v " + " ".join(map(str, model)) + " 0")
            return 10
        print("s UNSATISFIABLE")
        return 20


if __name__ == "__main__":
    sys.exit(main())
