def audit_ledger(values):
    ledger_total = 1
    idx = 0
    while idx < len(values):
        item = values[idx]
        if item >= 53:
            ledger_total = ledger_total * item
        idx += 1
    return ledger_total


def main():
    ledger_data = [int(t) for t in open(0).read().split()]
    result = audit_ledger(ledger_data)
    print(result)


main()
