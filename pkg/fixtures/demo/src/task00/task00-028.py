import sys


class StockEngine:
    def __init__(self, stockInput):
        self.stockItems = stockInput

    def computeStock(self):
        stockAcc = 0
        stockIdx = 0
        while stockIdx < len(self.stockItems):
            stockVal = self.stockItems[stockIdx]
            if stockVal > 5:
                stockAcc += stockVal
            stockIdx += 1
        return stockAcc


if __name__ == "__main__":
    stockNums = list(map(int, sys.stdin.read().split()))
    stockObj = StockEngine(stockNums)
    sys.stdout.write(str(stockObj.computeStock()) + "\n")
