#!/usr/bin/env python3
"""Writes fixtures/case_study_synthetic.json.

The criteria tree, maturity scale, limiting profiles and weight information
follow the operational-maturity case study. The institutions' evaluations are
synthetic: each institution gets a base maturity and every elementary
criterion a term within two steps of it, drawn from random.Random(SEED).
"""

import json
import random
import sys
from pathlib import Path

SEED = 20240517

SCALE = [
    ("Extremely Mature", "EM", [8, 0.75, 0]),
    ("Highly Mature", "HM", [7, 0.75, 0.75]),
    ("Very Mature", "VM", [6, 0.75, 0.75]),
    ("Slightly Mature", "SM", [5, 0.75, 0.75]),
    ("Mature", "M", [4, 0.75, 0.75]),
    ("Slightly Immature", "SI", [3, 0.75, 0.75]),
    ("Very Immature", "VI", [2, 0.75, 0.75]),
    ("Highly Immature", "HI", [1, 0.75, 0.75]),
    ("Extremely Immature", "EI", [0, 0, 0.75]),
]

PROCESSES = [
    ("Project prospecting", 1),
    ("Technical writing", 2),
    ("Project negotiation", 1),
    ("Project management", 2),
    ("Project execution", 1),
    ("Portfolio management", 2),
    ("Intellectual property management", 3),
    ("Communication", 3),
    ("Training of human resources", 3),
]

INPUTS = [
    ("Infrastructure", 2),
    ("Human resources", 2),
    ("Counterpart", 3),
    ("Working protocols", 4),
    ("Institutional references", 1),
]

# Index into SCALE (0 = EM) around which each institution's terms are drawn.
BASE_MATURITY = [3, 6, 2, 4, 6, 7, 6, 7]


def tree():
    processes = []
    for label, _ in PROCESSES:
        inputs = {
            "label": "Process inputs",
            "weights": {"kind": "ordinal", "ranks": [rank for _, rank in INPUTS]},
            "children": [{"label": name} for name, _ in INPUTS],
        }
        processes.append({
            "label": label,
            "weights": {"kind": "deterministic", "values": [0.6, 0.4]},
            "children": [{"label": "Existence of the process"}, inputs],
        })
    return {
        "weights": {"kind": "ordinal", "ranks": [rank for _, rank in PROCESSES]},
        "children": processes,
    }


def alternatives(rng):
    leaves = len(PROCESSES) * (1 + len(INPUTS))
    out = []
    for i, base in enumerate(BASE_MATURITY, start=1):
        values = []
        for _ in range(leaves):
            index = min(len(SCALE) - 1, max(0, base + rng.randint(-2, 2)))
            values.append(SCALE[index][1])
        out.append({"name": f"Inst. {i}", "values": values})
    return out


def document():
    rng = random.Random(SEED)
    return {
        "schema": 1,
        "name": f"case-study-synthetic (seed {SEED})",
        "categories": ["C1", "C2", "C3", "C4"],
        "scales": {
            "maturity": [{"term": t, "abbrev": a, "tfn": tfn} for t, a, tfn in SCALE],
        },
        "tree": tree(),
        "preferences": {"default": {"type": "usual", "direction": "max"}},
        "profiles": {"default": [8, "HM", "SM", "SI", 0]},
        "alternatives": alternatives(rng),
        "smaa": {"iterations": 10000, "seed": 0, "rule": "net", "threshold": 0.5},
    }


def main():
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures" / "case_study_synthetic.json"
    target.write_text(json.dumps(document(), indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
