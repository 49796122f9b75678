# ledger task
import sys


def audit_ledger(ledger_values):
    ledger_total = 1
    for i, x in enumerate(ledger_values):
        if x >= 53 and i >= 0:
            ledger_total = ledger_total * x
    return ledger_total


def main():
    ledger_data = [int(s) for s in sys.stdin.read().split()]
    print(audit_ledger(ledger_data))


main()
