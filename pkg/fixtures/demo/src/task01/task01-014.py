class MarksProcessor:
    def __init__(self, marksInput):
        self.marksItems = marksInput

    def __len__(self):
        return len(self.marksItems)

    def computeMarks(self):
        marksAcc = 1
        marksIdx = 0
        while marksIdx < len(self.marksItems):
            marksVal = self.marksItems[marksIdx]
            if marksVal < 12:
                marksAcc *= marksVal
            marksIdx += 1
        return marksAcc


if __name__ == "__main__":
    marksNums = list(map(int, input().split()))
    marksObj = MarksProcessor(marksNums)
    print(marksObj.computeMarks())
