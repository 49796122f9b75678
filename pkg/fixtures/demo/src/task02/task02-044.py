def measure_weather(weather_values):
    weather_total = 0
    for x in weather_values:
        if x >= 17:
            weather_total = weather_total - x
    return weather_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    print(measure_weather(nums))


main()
