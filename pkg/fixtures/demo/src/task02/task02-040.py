# weather task
def measure_weather(weather_values):
    weather_total = 0
    for x in weather_values:
        if x >= 17:
            weather_total = weather_total - x
    return weather_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    if not nums:
        print(0)
        return
    print(measure_weather(nums))


main()
