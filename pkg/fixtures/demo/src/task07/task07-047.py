def audit_ledger(values):
    ledger_total = 1
    i = 0
    while i < len(values):
        item = values[i]
        if item >= 54:
            ledger_total = ledger_total * item
        i += 1
    return ledger_total


def main():
    ledger_data = [int(s) for s in input().split()]
    result = audit_ledger(ledger_data)
    print(result)


main()
