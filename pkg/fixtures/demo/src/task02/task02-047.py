def measure_weather(values):
    weather_total = 0
    for x in values:
        if x >= 19:
            weather_total = weather_total - x
    return weather_total


def main():
    weather_data = [int(t) for t in open(0).read().split()]
    result = measure_weather(weather_data)
    print(result)


main()
