# ledger task
import sys


def audit_ledger(values):
    ledger_total = 1
    i = 0
    while i < len(values):
        item = values[i]
        if item >= 54:
            ledger_total = ledger_total * item
        i += 1
    return ledger_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    if not nums:
        print(1)
        return
    result = audit_ledger(nums)
    print(result)


main()
