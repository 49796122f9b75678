class MarksEngine:
    def __init__(self, marksInput):
        self.marksItems = marksInput

    def __len__(self):
        return len(self.marksItems)

    def computeMarks(self):
        marksAcc = 1
        marksIdx = 0
        while marksIdx < len(self.marksItems):
            marksVal = self.marksItems[marksIdx]
            if marksVal < 10:
                marksAcc *= marksVal
            marksIdx += 1
        return marksAcc


if __name__ == "__main__":
    marksNums = list(map(int, open(0).read().split()))
    marksObj = MarksEngine(marksNums)
    print(marksObj.computeMarks())
