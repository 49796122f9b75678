class VehicleProcessor:
    def __init__(self, vehicleInput):
        self.vehicleItems = vehicleInput

    def computeVehicle(self):
        vehicleAcc = 0
        vehicleIdx = 0
        while vehicleIdx < len(self.vehicleItems):
            vehicleVal = self.vehicleItems[vehicleIdx]
            if vehicleVal <= 26:
                vehicleAcc ^= vehicleVal
            vehicleIdx += 1
        return vehicleAcc


if __name__ == "__main__":
    vehicleNums = list(map(int, input().split()))
    vehicleObj = VehicleProcessor(vehicleNums)
    print(vehicleObj.computeVehicle())
