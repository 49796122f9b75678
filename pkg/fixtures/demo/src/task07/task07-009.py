import sys


def audit_ledger(ledger_values):
    ledger_total = 1
    i = 0
    while i < len(ledger_values):
        v = ledger_values[i]
        if v >= 53:
            ledger_total = ledger_total * v
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
