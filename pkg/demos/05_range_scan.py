# Scanning a range of primes and writing the CSV table.
import csv
import sys

from permsign.verify import CSV_HEADER, scan

records = scan(3, 300, mode="full")
w = csv.writer(sys.stdout, lineterminator="\n")
w.writerow(CSV_HEADER)
for rec in records:
    w.writerow(rec.csv_row())
print(sum(r.passed for r in records), "of", len(records), "passed", file=sys.stderr)

# above the full-mode threshold only the smallest k roots are tested, except
# that the equidistribution case derives all signs by conjugation transport
for rec in scan(10_000, 10_100, mode="sampled", sample=4):
    print(rec.p, rec.case, rec.mode, rec.passed, file=sys.stderr)
