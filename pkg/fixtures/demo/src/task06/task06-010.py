class CropEngine:
    def __init__(self, cropInput):
        self.cropItems = cropInput

    def __len__(self):
        return len(self.cropItems)

    def computeCrop(self):
        cropAcc = 0
        cropIdx = 0
        while cropIdx < len(self.cropItems):
            cropVal = self.cropItems[cropIdx]
            if cropVal < 47:
                cropAcc += cropVal
            cropIdx += 1
        return cropAcc


if __name__ == "__main__":
    cropNums = list(map(int, input().split()))
    cropObj = CropEngine(cropNums)
    print(cropObj.computeCrop(), end="\n")
