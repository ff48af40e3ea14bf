#!/usr/bin/env python3
"""Solve an LP-format MILP with scipy's HiGHS backend.

Reads the LP subset emitted by `field-planner export` (Maximize / Subject To /
Binary / End, explicit coefficients, <= and >= and = relations) and prints

    Objective: <value>

which is exactly what the --solver-cmd hook scrapes by default:

    field-planner export --in inst.json --variant full --out m.lp \
        --solver-cmd "python3 tools/lp_solve_scipy.py {file}"
"""

import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp


def tokenize(path):
    tokens = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            line = line.split("\\")[0]  # backslash starts a comment
            tokens.extend(line.split())
    return tokens


def parse(tokens):
    sections = {"maximize", "minimize", "subject", "binary", "bounds", "general", "end"}
    i = 0
    sense = 1.0
    objective = {}
    rows = []  # (coeffs dict, relation, rhs)
    binaries = []

    def parse_terms(stop_relations):
        nonlocal i
        coeffs = {}
        sign = 1.0
        pending = None  # coefficient waiting for its variable
        while i < len(tokens):
            tok = tokens[i]
            low = tok.lower()
            if low in stop_relations or (low in sections and pending is None):
                break
            i += 1
            if tok == "+":
                sign = 1.0
            elif tok == "-":
                sign = -sign
            elif tok.endswith(":"):
                continue  # row label
            else:
                try:
                    value = float(tok)
                    pending = sign * value if pending is None else pending * value
                except ValueError:
                    coeffs[tok] = coeffs.get(tok, 0.0) + (pending if pending is not None else sign)
                    pending = None
                    sign = 1.0
        return coeffs

    while i < len(tokens):
        tok = tokens[i].lower()
        if tok in ("maximize", "max"):
            i += 1
            sense = -1.0  # scipy minimizes
            objective = parse_terms({"subject"})
        elif tok == "subject":
            i += 2  # "Subject To"
            while i < len(tokens) and tokens[i].lower() not in sections:
                coeffs = parse_terms({"<=", ">=", "=", "<", ">"})
                relation = tokens[i]
                i += 1
                rhs = float(tokens[i])
                i += 1
                rows.append((coeffs, relation, rhs))
        elif tok == "binary":
            i += 1
            while i < len(tokens) and tokens[i].lower() not in sections:
                binaries.append(tokens[i])
                i += 1
        else:
            i += 1
    return sense, objective, rows, binaries


def main():
    if len(sys.argv) != 2:
        print("usage: lp_solve_scipy.py model.lp", file=sys.stderr)
        return 2
    sense, objective, rows, binaries = parse(tokenize(sys.argv[1]))

    variables = sorted(set(binaries) | set(objective) | {v for r in rows for v in r[0]})
    index = {name: j for j, name in enumerate(variables)}
    n = len(variables)

    c = np.zeros(n)
    for name, coeff in objective.items():
        c[index[name]] = sense * coeff

    constraints = []
    for coeffs, relation, rhs in rows:
        a = np.zeros(n)
        for name, coeff in coeffs.items():
            a[index[name]] = coeff
        if relation in ("<=", "<"):
            constraints.append(LinearConstraint(a, -np.inf, rhs))
        elif relation in (">=", ">"):
            constraints.append(LinearConstraint(a, rhs, np.inf))
        else:
            constraints.append(LinearConstraint(a, rhs, rhs))

    result = milp(c=c, constraints=constraints, integrality=np.ones(n), bounds=Bounds(0.0, 1.0))
    if not result.success:
        print(f"no solution: {result.message}", file=sys.stderr)
        return 1
    print(f"Objective: {sense * result.fun:.12g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
