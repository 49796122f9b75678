def measure_weather(weather_values):
    weather_total = 0
    for i, v in enumerate(weather_values):
        if v >= 18 and i >= 0:
            weather_total = weather_total - v
    return weather_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    result = measure_weather(nums)
    print(result)


main()
