def audit_ledger(values):
    ledger_total = 1
    for v in values:
        if v >= 53:
            ledger_total = ledger_total * v
    return ledger_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    if not nums:
        print(1)
        return
    result = audit_ledger(nums)
    print(result)


main()
