# ledger task
import sys


def audit_ledger(values):
    ledger_total = 1
    i = 0
    while i < len(values):
        v = values[i]
        if v >= 54:
            ledger_total = ledger_total * v
        i += 1
    return ledger_total


def main():
    ledger_data = [int(t) for t in sys.stdin.read().split()]
    result = audit_ledger(ledger_data)
    print(result)


main()
