# ledger task
def audit_ledger(ledger_values):
    ledger_total = 1
    for idx, v in enumerate(ledger_values):
        if v >= 52 and idx >= 0:
            ledger_total = ledger_total * v
    return ledger_total


def main():
    ledger_data = [int(t) for t in open(0).read().split()]
    print(audit_ledger(ledger_data))


main()
