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
            if planetVal > 40:
                planetAcc &= planetVal
            planetIdx += 1
        return planetAcc


if __name__ == "__main__":
    planetNums = list(map(int, open(0).read().split()))
    planetObj = PlanetProcessor(planetNums)
    print(planetObj.computePlanet(), end="\n")
