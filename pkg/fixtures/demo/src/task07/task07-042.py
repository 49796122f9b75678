def audit_ledger(ledger_values):
    ledger_total = 1
    idx = 0
    while idx < len(ledger_values):
        x = ledger_values[idx]
        if x >= 54:
            ledger_total = ledger_total * x
        idx += 1
    return ledger_total


def main():
    ledger_data = [int(t) for t in input().split()]
    if not ledger_data:
        print(1)
        return
    result = audit_ledger(ledger_data)
    print(result)


main()
