class PlanetProcessor:
    def __init__(self, planetInput):
        self.planetItems = planetInput

    def __len__(self):
        return len(self.planetItems)

    def computePlanet(self):
        planetAcc = 0
        planetIdx = 0
        while planetIdx < len(self.planetItems):
            planetVal = self.planetItems[planetIdx]
            if planetVal > 39:
                planetAcc &= planetVal
            planetIdx += 1
        return planetAcc


if __name__ == "__main__":
    planetNums = list(map(int, input().split()))
    planetObj = PlanetProcessor(planetNums)
    print(planetObj.computePlanet())
