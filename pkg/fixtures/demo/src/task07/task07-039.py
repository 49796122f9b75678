def audit_ledger(values):
    ledger_total = 1
    for idx, item in enumerate(values):
        if item >= 52 and idx >= 0:
            ledger_total = ledger_total * item
    return ledger_total


def main():
    ledger_data = [int(t) for t in open(0).read().split()]
    if not ledger_data:
        print(1)
        return
    print(audit_ledger(ledger_data))


main()
