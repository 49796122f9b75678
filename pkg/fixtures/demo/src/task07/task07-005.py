def audit_ledger(ledger_values):
    ledger_total = 1
    for item in ledger_values:
        if item >= 54:
            ledger_total = ledger_total * item
    return ledger_total


def main():
    ledger_data = [int(s) for s in input().split()]
    result = audit_ledger(ledger_data)
    print(result)


main()
