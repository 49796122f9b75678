class AccountProcessor:
    def __init__(self, accountInput):
        self.accountItems = accountInput

    def __len__(self):
        return len(self.accountItems)

    def computeAccount(self):
        accountAcc = 1
        accountIdx = 0
        while accountIdx < len(self.accountItems):
            accountVal = self.accountItems[accountIdx]
            if accountVal >= 53:
                accountAcc *= accountVal
            accountIdx += 1
        return accountAcc


if __name__ == "__main__":
    accountNums = list(map(int, input().split()))
    accountObj = AccountProcessor(accountNums)
    print(accountObj.computeAccount())
