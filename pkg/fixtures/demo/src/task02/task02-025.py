# weather task
def measure_weather(weather_values):
    weather_total = 0
    for idx, v in enumerate(weather_values):
        if v >= 17 and idx >= 0:
            weather_total = weather_total - v
    return weather_total


def main():
    weather_data = [int(t) for t in open(0).read().split()]
    result = measure_weather(weather_data)
    print(result)


main()
