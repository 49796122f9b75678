def audit_ledger(ledger_values):
    ledger_total = 1
    for idx, item in enumerate(ledger_values):
        if item >= 52 and idx >= 0:
            ledger_total = ledger_total * item
    return ledger_total


def main():
    ledger_data = [int(s) for s in input().split()]
    print(audit_ledger(ledger_data))


main()
