def audit_ledger(values):
    ledger_total = 1
    for idx, item in enumerate(values):
        if item >= 54 and idx >= 0:
            ledger_total = ledger_total * item
    return ledger_total


def main():
    ledger_data = [int(s) for s in open(0).read().split()]
    result = audit_ledger(ledger_data)
    print(result)


main()
