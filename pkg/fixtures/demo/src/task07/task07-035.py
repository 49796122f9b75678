def audit_ledger(values):
    ledger_total = 1
    idx = 0
    while idx < len(values):
        x = values[idx]
        if x >= 54:
            ledger_total = ledger_total * x
        idx += 1
    return ledger_total


def main():
    ledger_data = [int(s) for s in input().split()]
    result = audit_ledger(ledger_data)
    print(result)


main()
