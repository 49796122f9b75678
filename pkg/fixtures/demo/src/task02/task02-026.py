def measure_weather(weather_values):
    weather_total = 0
    i = 0
    while i < len(weather_values):
        v = weather_values[i]
        if v >= 17:
            weather_total = weather_total - v
        i += 1
    return weather_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    print(measure_weather(nums))


main()
