def measure_weather(weather_values):
    weather_total = 0
    for v in weather_values:
        if v >= 17:
            weather_total = weather_total - v
    return weather_total


def main():
    weather_data = [int(s) for s in open(0).read().split()]
    print(measure_weather(weather_data))


main()
