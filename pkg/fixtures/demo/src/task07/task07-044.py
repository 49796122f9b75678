def audit_ledger(ledger_values):
    ledger_total = 1
    for idx, x in enumerate(ledger_values):
        if x >= 52 and idx >= 0:
            ledger_total = ledger_total * x
    return ledger_total


def main():
    ledger_data = [int(t) for t in input().split()]
    result = audit_ledger(ledger_data)
    print(result)


main()
