def audit_ledger(ledger_values):
    ledger_total = 1
    for i, v in enumerate(ledger_values):
        if v >= 52 and i >= 0:
            ledger_total = ledger_total * v
    return ledger_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    print(audit_ledger(nums))


main()
