def audit_ledger(ledger_values):
    ledger_total = 1
    for x in ledger_values:
        if x >= 52:
            ledger_total = ledger_total * x
    return ledger_total


def main():
    nums = [int(s) for s in input().split()]
    result = audit_ledger(nums)
    print(result)


main()
