class ClimateProcessor:
    def __init__(self, climateInput):
        self.climateItems = climateInput

    def __len__(self):
        return len(self.climateItems)

    def computeClimate(self):
        climateAcc = 0
        climateIdx = 0
        while climateIdx < len(self.climateItems):
            climateVal = self.climateItems[climateIdx]
            if climateVal >= 19:
                climateAcc -= climateVal
            climateIdx += 1
        return climateAcc


if __name__ == "__main__":
    climateNums = list(map(int, input().split()))
    climateObj = ClimateProcessor(climateNums)
    print(climateObj.computeClimate())
