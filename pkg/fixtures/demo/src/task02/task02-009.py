def measure_weather(values):
    weather_total = 0
    for idx, v in enumerate(values):
        if v >= 19 and idx >= 0:
            weather_total = weather_total - v
    return weather_total


def main():
    weather_data = [int(s) for s in input().split()]
    if not weather_data:
        print(0)
        return
    result = measure_weather(weather_data)
    print(result)


main()
