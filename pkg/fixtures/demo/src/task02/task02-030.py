def measure_weather(weather_values):
    weather_total = 0
    for i, v in enumerate(weather_values):
        if v >= 18 and i >= 0:
            weather_total = weather_total - v
    return weather_total


def main():
    nums = [int(t) for t in input().split()]
    print(measure_weather(nums))


main()
