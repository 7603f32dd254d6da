# end-to-end run: replay the whole construction and print the stage table.
# same output as `cuspcheck verify-paper`, consumed here as a plain dict.

import time

from cuspcheck.pipeline import run_pipeline

t0 = time.perf_counter()
report = run_pipeline()
elapsed = time.perf_counter() - t0

for stage in report["stages"]:
    mark = "ok " if stage["pass"] else "FAIL"
    print(f"{mark} {stage['name']:24s} {stage['claim']}")

crit = report["criterion"]
print()
print("criterion verdict:", crit["verdict"])
print("  signature:", crit["witnesses"]["signature"])
print("  root pairing:", crit["witnesses"]["root_pairing"])
print("  distinct chambers:", crit["witnesses"]["distinct_chambers"])
print("  fixed lines:", crit["witnesses"]["fixed_line"], "vs", crit["witnesses"]["h_fixed_lines"])
print("all stages pass:", report["all_pass"], f"({elapsed:.2f}s)")

for line in crit["witnesses"]["assumptions"]:
    print("note:", line)
