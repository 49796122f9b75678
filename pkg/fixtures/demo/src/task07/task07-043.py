def audit_ledger(ledger_values):
    ledger_total = 1
    for x in ledger_values:
        if x >= 53:
            ledger_total = ledger_total * x
    return ledger_total


def main():
    ledger_data = [int(t) for t in input().split()]
    if not ledger_data:
        print(1)
        return
    result = audit_ledger(ledger_data)
    print(result)


main()
