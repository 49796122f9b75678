# ledger task
def audit_ledger(values):
    ledger_total = 1
    for i, v in enumerate(values):
        if v >= 54 and i >= 0:
            ledger_total = ledger_total * v
    return ledger_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    result = audit_ledger(nums)
    print(result)


main()
