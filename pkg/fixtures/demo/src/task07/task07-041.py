def audit_ledger(ledger_values):
    ledger_total = 1
    i = 0
    while i < len(ledger_values):
        x = ledger_values[i]
        if x >= 53:
            ledger_total = ledger_total * x
        i += 1
    return ledger_total


def main():
    ledger_data = [int(t) for t in input().split()]
    result = audit_ledger(ledger_data)
    print(result)


main()
