def measure_weather(weather_values):
    weather_total = 0
    idx = 0
    while idx < len(weather_values):
        item = weather_values[idx]
        if item >= 19:
            weather_total = weather_total - item
        idx += 1
    return weather_total


def main():
    weather_data = [int(t) for t in input().split()]
    print(measure_weather(weather_data))


main()
