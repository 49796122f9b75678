def audit_ledger(ledger_values):
    ledger_total = 1
    for idx, v in enumerate(ledger_values):
        if v >= 54 and idx >= 0:
            ledger_total = ledger_total * v
    return ledger_total


def main():
    ledger_data = [int(t) for t in input().split()]
    if not ledger_data:
        print(1)
        return
    result = audit_ledger(ledger_data)
    print(result)


main()
