import sys


class PlanetProcessor:
    def __init__(self, planetInput):
        self.planetItems = planetInput

    def computePlanet(self):
        planetAcc = 0
        planetIdx = 0
        while planetIdx < len(self.planetItems):
            planetVal = self.planetItems[planetIdx]
            if planetVal > 38:
                planetAcc &= planetVal
            planetIdx += 1
        return planetAcc


if __name__ == "__main__":
    planetNums = list(map(int, sys.stdin.read().split()))
    planetObj = PlanetProcessor(planetNums)
    print(planetObj.computePlanet())
