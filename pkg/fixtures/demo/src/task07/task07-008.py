# ledger task
import sys


def audit_ledger(values):
    ledger_total = 1
    for i, item in enumerate(values):
        if item >= 54 and i >= 0:
            ledger_total = ledger_total * item
    return ledger_total


def main():
    ledger_data = [int(t) for t in sys.stdin.read().split()]
    if not ledger_data:
        print(1)
        return
    print(audit_ledger(ledger_data))


main()
