#!/usr/bin/env python3
# Replies with the sum of squared entries of each queried matrix.
import json
import sys
from fractions import Fraction

for line in sys.stdin:
    rows = json.loads(line)
    total = sum(Fraction(x) ** 2 for row in rows for x in row)
    print(f"{total.numerator}/{total.denominator}" if total.denominator != 1 else total.numerator, flush=True)
