# weather task
def measure_weather(values):
    weather_total = 0
    for v in values:
        if v >= 18:
            weather_total = weather_total - v
    return weather_total


def main():
    weather_data = [int(t) for t in input().split()]
    print(measure_weather(weather_data))


main()
