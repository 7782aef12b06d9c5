"""Write two assessors' grade lists with fixed agreement counts.

750 answers: 606 identical grades, 70 more that differ but fall on the same
side of correct/incorrect, 74 that cross sides.
"""

import random
from pathlib import Path

N, EXACT, SAME_SIDE = 750, 606, 70
OUT = Path(__file__).resolve().parent.parent / "src/rqeqa/data/assessor_grades.tsv"


def main():
    rng = random.Random(2018)
    kinds = ["exact"] * EXACT + ["side"] * SAME_SIDE + ["cross"] * (N - EXACT - SAME_SIDE)
    rng.shuffle(kinds)
    rows = []
    for i, kind in enumerate(kinds, 1):
        a = rng.choice((1, 2, 3, 4))
        if kind == "exact":
            b = a
        elif kind == "side":
            b = {1: 2, 2: 1, 3: 4, 4: 3}[a]
        else:
            b = rng.choice((3, 4)) if a <= 2 else rng.choice((1, 2))
        rows.append(f"A{i:04d}\t{a}\t{b}")
    OUT.write_text("# answer_id\tassessor_a\tassessor_b\n" + "\n".join(rows) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
