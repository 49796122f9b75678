# ledger task
def audit_ledger(values):
    ledger_total = 1
    i = 0
    while i < len(values):
        v = values[i]
        if v >= 52:
            ledger_total = ledger_total * v
        i += 1
    return ledger_total


def main():
    ledger_data = [int(s) for s in input().split()]
    if not ledger_data:
        print(1)
        return
    result = audit_ledger(ledger_data)
    print(result)


main()
