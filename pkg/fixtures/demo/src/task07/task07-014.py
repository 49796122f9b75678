def audit_ledger(ledger_values):
    ledger_total = 1
    for idx, x in enumerate(ledger_values):
        if x >= 52 and idx >= 0:
            ledger_total = ledger_total * x
    return ledger_total


def main():
    nums = [int(s) for s in input().split()]
    print(audit_ledger(nums))


main()
