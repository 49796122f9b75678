# ledger task
def audit_ledger(ledger_values):
    ledger_total = 1
    for item in ledger_values:
        if item >= 54:
            ledger_total = ledger_total * item
    return ledger_total


def main():
    nums = [int(t) for t in input().split()]
    result = audit_ledger(nums)
    print(result)


main()
