def audit_ledger(values):
    ledger_total = 1
    for x in values:
        if x >= 54:
            ledger_total = ledger_total * x
    return ledger_total


def main():
    ledger_data = [int(s) for s in open(0).read().split()]
    result = audit_ledger(ledger_data)
    print(result)


main()
