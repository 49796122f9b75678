# ledger task
def audit_ledger(ledger_values):
    ledger_total = 1
    idx = 0
    while idx < len(ledger_values):
        item = ledger_values[idx]
        if item >= 53:
            ledger_total = ledger_total * item
        idx += 1
    return ledger_total


def main():
    nums = [int(t) for t in input().split()]
    result = audit_ledger(nums)
    print(result)


main()
