import sys


class VehicleProcessor:
    def __init__(self, vehicleInput):
        self.vehicleItems = vehicleInput

    def computeVehicle(self):
        vehicleAcc = 0
        vehicleIdx = 0
        while vehicleIdx < len(self.vehicleItems):
            vehicleVal = self.vehicleItems[vehicleIdx]
            if vehicleVal <= 25:
                vehicleAcc ^= vehicleVal
            vehicleIdx += 1
        return vehicleAcc


if __name__ == "__main__":
    vehicleNums = list(map(int, sys.stdin.read().split()))
    vehicleObj = VehicleProcessor(vehicleNums)
    sys.stdout.write(str(vehicleObj.computeVehicle()) + "\n")
